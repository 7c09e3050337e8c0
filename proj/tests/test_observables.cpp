// Copyright 2026 The dits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "dits/error.hpp"
#include "dits/linalg.hpp"
#include "dits/notation.hpp"
#include "dits/observables.hpp"
#include "oracles.hpp"

using namespace dits;

namespace {

Vector v(std::initializer_list<int> xs) {
    Vector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

Matrix m(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<Vector> rs;
    for (auto r : rows) rs.push_back(v(r));
    return Matrix::from_rows(rs);
}

SpectralData diag_spec(std::initializer_list<int> ev) {
    std::vector<Rational> e;
    for (int x : ev) e.emplace_back(x);
    return {e, DSD::standard(e.size())};
}

SpectralData flip_spec() { return {{Rational(1), Rational(-1)}, DSD(2, {{v({1, 1})}, {v({1, -1})}})}; }

Attribute attr(const GroundPtr& g, std::initializer_list<int> values) {
    std::vector<Rational> out;
    for (int x : values) out.emplace_back(x);
    return Attribute(g, out);
}

GroundPtr abc() { return make_ground({"a", "b", "c"}); }

}  // namespace

TEST(Linalg, RrefKernelInverse) {
    const Matrix a = m({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EXPECT_EQ(rank(a), 2u);
    const auto ker = kernel(a);
    ASSERT_EQ(ker.size(), 1u);
    EXPECT_EQ(oracle::apply(a, ker[0]), v({0, 0, 0}));
    const Matrix b = m({{2, 1}, {1, 1}});
    EXPECT_EQ(oracle::multiply(b, inverse(b)), Matrix::identity(2));
    EXPECT_THROW(inverse(a), Error);
}

TEST(Linalg, SubspaceEqualityIsBasisIndependent) {
    const Subspace x(3, {v({1, 1, 0}), v({0, 1, 1})});
    const Subspace y(3, {v({1, 2, 1}), v({1, 0, -1}), v({2, 2, 0})});
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.dim(), 2u);
    EXPECT_FALSE(x == Subspace::full(3));
    EXPECT_EQ(intersect(x, Subspace(3, {v({1, 0, 0}), v({0, 0, 1})})), Subspace(3, {v({1, 0, -1})}));
    EXPECT_EQ(sum(x, Subspace(3, {v({1, 0, 0})})), Subspace::full(3));
    EXPECT_EQ(Subspace(3, {}), Subspace::zero(3));
}

TEST(Linalg, ProjectionIsIdempotentAndSymmetric) {
    const Subspace s(3, {v({1, 2, 2})});
    const Matrix p = orthogonal_projection(s);
    EXPECT_EQ(oracle::multiply(p, p), p);
    EXPECT_TRUE(p.is_symmetric());
    EXPECT_EQ(p(0, 0), Rational(1, 9));
    EXPECT_EQ(p(1, 2), Rational(4, 9));
}

TEST(Attribute, InverseImage) {
    EXPECT_EQ(format_partition(inverse_image_partition(attr(abc(), {1, 1, 2}))), "ab|c");
    EXPECT_EQ(inverse_image_partition(attr(abc(), {3, 1, 2})), Partition::discrete(abc()));
    EXPECT_EQ(inverse_image_partition(attr(abc(), {5, 5, 5})), Partition::indiscrete(abc()));
    EXPECT_EQ(attr(abc(), {2, 1, 2}).image(), (std::vector<Rational>{1, 2}));
}

TEST(Attribute, SpectralCheck) {
    EXPECT_TRUE(set_spectral_check(attr(abc(), {1, 1, 2})));
    EXPECT_TRUE(set_spectral_check(attr(abc(), {0, 0, 0})));
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int t = 0; t < 100; ++t) {
        const auto g = letter_ground(1 + t % 6);
        std::vector<Rational> values;
        for (std::size_t i = 0; i < g->size(); ++i) values.emplace_back(val(rng), 1 + t % 4);
        EXPECT_TRUE(set_spectral_check(Attribute(g, values)));
    }
}

TEST(Operator, FromDsd) {
    EXPECT_EQ(operator_from_dsd(diag_spec({1, -1})).matrix(), m({{1, 0}, {0, -1}}));
    EXPECT_EQ(operator_from_dsd(flip_spec()).matrix(), m({{0, 1}, {1, 0}}));
    try {
        operator_from_dsd({{Rational(1), Rational(1)}, DSD::standard(2)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DuplicateEigenvalue);
    }
}

TEST(Operator, DsdValidation) {
    EXPECT_THROW(DSD(2, {{v({1, 0})}, {v({2, 0})}}), Error);         // dependent
    EXPECT_THROW(DSD(3, {{v({1, 0, 0})}, {v({0, 1, 0})}}), Error);   // not spanning
    EXPECT_THROW(DSD(2, {{v({1, 0})}, {}}), Error);                  // empty subspace
    EXPECT_THROW(DSD(2, {{v({1, 0})}, {v({1, 1})}}), Error);         // not orthogonal
}

TEST(Operator, ResolutionOfUnity) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto spec = oracle::random_spectral(oracle::orthogonalise({}, n, rng), rng);
        Matrix total(n, n);
        for (const auto& p : projections(spec.dsd)) total = total + p;
        EXPECT_EQ(total, Matrix::identity(n));
        EXPECT_TRUE(operator_from_dsd(spec).matrix().is_symmetric());
    }
}

TEST(Operator, EigenvalueFunctionMatchesInverseImage) {
    const Attribute f = attr(abc(), {1, 1, 2});
    const SpectralData spec = attribute_spectrum(f);
    const Operator op = operator_from_dsd(spec);
    EXPECT_EQ(op.matrix(), m({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    const Attribute back = eigenvalue_function(op, abc());
    EXPECT_EQ(back.values(), f.values());
    EXPECT_EQ(inverse_image_partition(back), inverse_image_partition(f));
}

TEST(Commutator, Examples) {
    const Operator f = operator_from_dsd(diag_spec({1, -1}));
    const Operator g = operator_from_dsd(flip_spec());
    EXPECT_EQ(commutator(f, g), m({{0, 2}, {-2, 0}}));
    EXPECT_EQ(commutator(f, g), oracle::multiply(f.matrix(), g.matrix()) - oracle::multiply(g.matrix(), f.matrix()));
    EXPECT_TRUE(commutator(f, operator_from_dsd(diag_spec({3, 4}))).is_zero());
    EXPECT_TRUE(commutator(f, g).is_antisymmetric());
}

TEST(Commutator, KernelSpace) {
    EXPECT_EQ(kernel_space(Matrix(2, 2)), Subspace::full(2));
    EXPECT_EQ(kernel_space(m({{0, 2}, {-2, 0}})), Subspace::zero(2));
    EXPECT_EQ(kernel_space(m({{1, 1}, {1, 1}})), Subspace(2, {v({1, -1})}));
}

TEST(SimultaneousEigenspace, Examples) {
    EXPECT_EQ(simultaneous_eigenspace(DSD::standard(3), DSD::standard(3)), Subspace::full(3));
    EXPECT_EQ(simultaneous_eigenspace(DSD::standard(2), flip_spec().dsd), Subspace::zero(2));
    // Shares only e1.
    const DSD g(3, {{v({1, 0, 0})}, {v({0, 1, 1})}, {v({0, 1, -1})}});
    EXPECT_EQ(simultaneous_eigenspace(DSD::standard(3), g), Subspace(3, {v({1, 0, 0})}));
    // Block-diagonal shared structure: span{e1, e2} shared as a 2-dim eigenspace of both.
    const DSD h(3, {{v({1, 0, 0}), v({0, 1, 0})}, {v({0, 0, 1})}});
    const DSD k(3, {{v({1, 1, 0}), v({1, -1, 0})}, {v({0, 0, 1})}});
    EXPECT_EQ(simultaneous_eigenspace(h, k), Subspace::full(3));
}

TEST(Classify, ThreeKinds) {
    EXPECT_EQ(classify(diag_spec({1, 2}), diag_spec({5, -5})), Compatibility::Commuting);
    EXPECT_EQ(classify(diag_spec({1, -1}), flip_spec()), Compatibility::Conjugate);
    const SpectralData g{{Rational(1), Rational(2), Rational(3)},
                         DSD(3, {{v({1, 0, 0})}, {v({0, 1, 1})}, {v({0, 1, -1})}})};
    EXPECT_EQ(classify(diag_spec({1, 2, 3}), g), Compatibility::Incompatible);
    EXPECT_TRUE(theorem_se_equals_kernel(diag_spec({1, 2, 3}), g));
    EXPECT_STREQ(to_string(Compatibility::Conjugate), "Conjugate");
}

// F = diag(1,2,3) against an eigenbasis sharing no vector with e1, e2, e3.
// [F,G] is antisymmetric of odd size, so its kernel is non-zero while SE = 0.
TEST(SimultaneousEigenspace, StrictlyInsideKernelInOddDimension) {
    const SpectralData f = diag_spec({1, 2, 3});
    const SpectralData g{{Rational(1), Rational(2), Rational(3)},
                         DSD(3, {{v({1, 1, 1})}, {v({1, -1, 0})}, {v({1, 1, -2})}})};
    const Subspace se = simultaneous_eigenspace(f.dsd, g.dsd);
    const Subspace ker = kernel_space(commutator(operator_from_dsd(f), operator_from_dsd(g)));
    EXPECT_EQ(se, Subspace::zero(3));
    EXPECT_EQ(ker, Subspace(3, {v({4, -8, 1})}));
    EXPECT_TRUE(ker.contains(se));
    EXPECT_FALSE(theorem_se_equals_kernel(f, g));
    EXPECT_EQ(classify(f, g), Compatibility::Conjugate);
}

TEST(Classify, SeInsideKernelRandomised) {
    std::mt19937_64 rng(21);
    int kinds[3] = {0, 0, 0};
    for (int t = 0; t < 90; ++t) {
        const std::size_t n = 2 + t % 3;
        const int mode = (t / 3) % 3;
        auto [f, g] = oracle::random_operator_pair(n, mode, rng);
        const Operator fo = operator_from_dsd(f);
        const Operator go = operator_from_dsd(g);
        const Matrix c = oracle::multiply(fo.matrix(), go.matrix()) - oracle::multiply(go.matrix(), fo.matrix());
        const Subspace se = simultaneous_eigenspace(f.dsd, g.dsd);
        // Every simultaneous eigenvector is killed by the commutator.
        for (const auto& b : se.basis()) EXPECT_EQ(oracle::apply(c, b), Vector(n, 0));
        EXPECT_TRUE(kernel_space(c).contains(se));
        EXPECT_EQ(kernel_space(c).dim() + rank(c), n);
        // Equality holds for commuting pairs and in dimension 2, where a
        // non-zero antisymmetric matrix is invertible.
        if (mode == 0 || n == 2) EXPECT_TRUE(theorem_se_equals_kernel(f, g)) << "trial " << t;
        const Compatibility k = classify(f, g);
        ++kinds[static_cast<int>(k)];
        if (se.dim() == n) EXPECT_EQ(k, Compatibility::Commuting);
        if (se.dim() == 0) EXPECT_EQ(k, Compatibility::Conjugate);
        // Intersection family spans V exactly in the commuting case.
        Subspace spanned = Subspace::zero(n);
        for (const auto& s : intersection_family(f.dsd, g.dsd)) spanned = sum(spanned, s);
        EXPECT_EQ(spanned == Subspace::full(n), k == Compatibility::Commuting);
    }
    EXPECT_GT(kinds[static_cast<int>(Compatibility::Commuting)], 0);
    EXPECT_GT(kinds[static_cast<int>(Compatibility::Incompatible)], 0);
}

TEST(Completeness, Csca) {
    GroundPtr g = abc();
    EXPECT_TRUE(csca_complete({attr(g, {1, 2, 3})}));
    EXPECT_TRUE(csca_complete({attr(g, {1, 1, 2}), attr(g, {1, 2, 2})}));
    EXPECT_FALSE(csca_complete({attr(g, {1, 1, 2})}));
    EXPECT_FALSE(csca_complete({attr(g, {4, 4, 4}), attr(g, {4, 4, 4})}));
    EXPECT_THROW(csca_complete({attr(g, {1, 1, 2}), attr(make_ground({"x", "y", "z"}), {1, 2, 2})}), Error);
    const auto tuples = value_tuples({attr(g, {1, 1, 2}), attr(g, {1, 2, 2})});
    EXPECT_EQ(tuples, (std::vector<std::vector<Rational>>{{1, 1}, {1, 2}, {2, 2}}));
}

TEST(Completeness, Csco) {
    EXPECT_TRUE(csco_complete({DSD::standard(3)}));
    const DSD f(3, {{v({1, 0, 0}), v({0, 1, 0})}, {v({0, 0, 1})}});
    const DSD g(3, {{v({1, 0, 0})}, {v({0, 1, 0}), v({0, 0, 1})}});
    EXPECT_TRUE(csco_complete({f, g}));
    EXPECT_FALSE(csco_complete({f}));
    try {
        csco_complete({DSD::standard(2), flip_spec().dsd});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCommuting);
    }
}

TEST(Product, InverseImageOfProductAttribute) {
    GroundPtr u = abc();
    GroundPtr w = make_ground({"x", "y"});
    for (const auto& fv : {std::vector<int>{1, 1, 2}, std::vector<int>{1, 2, 3}, std::vector<int>{0, 0, 0}}) {
        for (const auto& gv : {std::vector<int>{1, 2}, std::vector<int>{7, 7}}) {
            std::vector<Rational> a(fv.begin(), fv.end()), b(gv.begin(), gv.end());
            const Attribute f(u, a), g(w, b);
            const Attribute fg = product_attribute(f, g);
            EXPECT_EQ(fg.ground().label(1), "a:y");
            EXPECT_EQ(inverse_image_partition(fg),
                      product_partition(inverse_image_partition(f), inverse_image_partition(g)));
        }
    }
}
