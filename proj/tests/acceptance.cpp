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

// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dits/density.hpp"
#include "dits/entropy.hpp"
#include "dits/notation.hpp"
#include "dits/observables.hpp"
#include "dits/z2dyn.hpp"
#include "oracles.hpp"

using namespace dits;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

bool report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) o.require(false, "took longer than " + std::to_string(limit_s) + " s");
    std::printf("%s  criterion %d  %-44s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    return o.ok;
}

Outcome golden_example() {
    Outcome o;
    GroundPtr g = make_ground({"a", "b", "c"});
    const ProbGroundSet p(g, {Rational(1, 3), Rational(1, 4), Rational(5, 12)});
    const Partition pi = parse_partition("a|bc", g);
    const Partition sigma = parse_partition("ab|c", g);
    o.require(logical_entropy(pi, p) == Rational(4, 9), "h(pi) != 4/9");
    const DensityMatrix r = rho(pi, p);
    const DensityMatrix hat = luders_mixture(r, sigma);
    const std::vector<Rational> diag{Rational(1, 3), Rational(1, 4), Rational(5, 12)};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            o.require(hat.radicand(i, k) == (i == k ? Rational(diag[i] * diag[i]) : Rational(0)), "rho-hat not diagonal");
        }
        o.require(hat.diagonal(i) == diag[i], "rho-hat diagonal");
    }
    o.require(join(pi, sigma) == Partition::discrete(g), "pi v sigma != 1_U");
    o.require(hat == rho(join(pi, sigma), p), "rho-hat != rho(pi v sigma)");
    const LudersOutcome ab = luders_rule(hat, ProjectionMask(3, {0, 1}));
    o.require(ab.probability == Rational(7, 12), "outcome probability != 7/12");
    o.require(ab.state.diagonal(0) == Rational(4, 7) && ab.state.diagonal(1) == Rational(3, 7) &&
                  ab.state.diagonal(2) == 0,
              "Lueders state != diag(4/7, 3/7, 0)");
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (i != k) o.require(ab.state.radicand(i, k) == 0, "Lueders state off-diagonal");
        }
    }
    const Rational h_hat = quantum_logical_entropy(hat);
    o.require(h_hat == Rational(94) / 144, "h(rho-hat) != 94/144");
    const Rational delta = h_hat - quantum_logical_entropy(r);
    // sqrt(5)/(4 sqrt(3)) squared is 5/48.
    o.require(delta == Rational(5, 24) && delta == 2 * r.radicand(1, 2) && r.radicand(1, 2) == Rational(5, 48),
              "delta h != 5/24 = 2 (sqrt5/(4 sqrt3))^2");
    return o;
}

Outcome double_slit_distributions() {
    Outcome o;
    o.require(double_slit(1) == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)},
              "case 1 != (1/4, 1/2, 1/4)");
    o.require(double_slit(2) == std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2)}, "case 2 != (1/2, 0, 1/2)");
    o.require(is_nonsingular(double_slit_setup().dynamics.map()), "dynamics singular over GF(2)");
    return o;
}

// All partition pairs on n = 1..5, each under 100 random probability vectors.
Outcome theorem_suites() {
    constexpr int kTrials = 100;
    std::vector<Outcome> results(5 * kTrials);
    auto work = [&](std::size_t slot) {
        Outcome& o = results[slot];
        const std::size_t n = 1 + slot / kTrials;
        GroundPtr g = letter_ground(n);
        std::mt19937_64 rng(1000 + slot);
        const ProbGroundSet p = oracle::random_probs(g, rng);
        const auto all = all_partitions(g);
        std::vector<oracle::Pairs> dits;
        std::vector<DensityMatrix> rhos;
        std::vector<Rational> h;
        for (const auto& pi : all) {
            dits.push_back(oracle::dits_of(pi));
            rhos.push_back(rho(pi, p));
            h.push_back(logical_entropy(pi, p));
            o.require(quantum_logical_entropy(rhos.back()) == h.back(), "h(rho(pi)) != h(pi)");
        }
        const std::string where = " (n=" + std::to_string(n) + ")";
        for (std::size_t a = 0; a < all.size(); ++a) {
            for (std::size_t b = 0; b < all.size(); ++b) {
                const Partition& pi = all[a];
                const Partition& sigma = all[b];
                const Partition j = join(pi, sigma);
                const DensityMatrix hat = luders_mixture(rhos[a], sigma);
                o.require(hat == rho(j, p), "rho-hat != rho(pi v sigma)" + where);
                Rational zeroed = 0;
                for (const auto& [i, k] : state_reduction_audit(rhos[a], sigma)) zeroed += rhos[a].radicand(i, k);
                o.require(quantum_logical_entropy(hat) - h[a] == zeroed, "delta h != zeroed squares" + where);
                auto u = dits[a];
                u.insert(dits[b].begin(), dits[b].end());
                o.require(oracle::dits_of(j) == u, "dit(pi v sigma) != dit(pi) u dit(sigma)" + where);
                o.require((implication(sigma, pi) == Partition::discrete(g)) == oracle::refines(sigma, pi),
                          "implication(sigma,pi)=1 <=> sigma refines pi" + where);
                const auto c = compound_logical(pi, sigma, p);
                o.require(c.pi_given_sigma == oracle::pair_measure(oracle::minus(dits[a], dits[b]), p) &&
                              c.sigma_given_pi == oracle::pair_measure(oracle::minus(dits[b], dits[a]), p) &&
                              c.mutual == oracle::pair_measure(oracle::meet_pairs(dits[a], dits[b]), p) &&
                              c.joint == c.pi_given_sigma + c.sigma_given_pi + c.mutual &&
                              c.joint == h[a] + h[b] - c.mutual,
                          "Venn identity" + where);
            }
        }
    };
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t s; (s = next++) < results.size();) work(s);
        });
    }
    for (auto& t : pool) t.join();
    Outcome o;
    for (const auto& r : results) o.require(r.ok, r.detail);
    return o;
}

Outcome se_equals_kernel() {
    Outcome o;
    const auto v = [](int x, int y) { return Vector{Rational(x), Rational(y)}; };
    const SpectralData diag{{Rational(1), Rational(-1)}, DSD::standard(2)};
    const SpectralData flip{{Rational(1), Rational(-1)}, DSD(2, {{v(1, 1)}, {v(1, -1)}})};
    o.require(theorem_se_equals_kernel(diag, flip), "diag/flip: SE != ker");
    o.require(simultaneous_eigenspace(diag.dsd, flip.dsd) == Subspace::zero(2), "diag/flip SE not zero");
    o.require(classify(diag, flip) == Compatibility::Conjugate, "diag/flip not Conjugate");
    const SpectralData other{{Rational(3), Rational(7)}, DSD::standard(2)};
    o.require(theorem_se_equals_kernel(diag, other), "diagonal pair: SE != ker");
    o.require(classify(diag, other) == Compatibility::Commuting, "diagonal pair not Commuting");
    const SpectralData d3{{Rational(1), Rational(2), Rational(3)}, DSD::standard(3)};
    const SpectralData e3{{Rational(0), Rational(5)}, DSD(3, {{Vector{1, 0, 0}, Vector{0, 0, 1}}, {Vector{0, 1, 0}}})};
    o.require(theorem_se_equals_kernel(d3, e3) && classify(d3, e3) == Compatibility::Commuting, "3x3 diagonal pair");

    std::mt19937_64 rng(2024);
    int seen[3] = {0, 0, 0};
    int unequal = 0;
    std::string first_unequal;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 3;
        const auto [f, g] = oracle::random_operator_pair(n, (t / 3) % 3, rng);
        const Operator fo = operator_from_dsd(f);
        const Operator go = operator_from_dsd(g);
        const Matrix c = oracle::multiply(fo.matrix(), go.matrix()) - oracle::multiply(go.matrix(), fo.matrix());
        const Subspace se = simultaneous_eigenspace(f.dsd, g.dsd);
        if (!theorem_se_equals_kernel(f, g) && unequal++ == 0) {
            first_unequal = "trial " + std::to_string(t) + ", n=" + std::to_string(n) + ", dim SE=" +
                            std::to_string(se.dim()) + ", dim ker=" + std::to_string(n - rank(c));
        }
        bool killed = true;
        for (const auto& b : se.basis()) killed = killed && oracle::apply(c, b) == Vector(n, 0);
        o.require(killed, "simultaneous eigenvector outside ker[F,G], trial " + std::to_string(t));
        const Compatibility k = classify(f, g);
        ++seen[static_cast<int>(k)];
        const Compatibility expected = se.dim() == n   ? Compatibility::Commuting
                                       : se.dim() == 0 ? Compatibility::Conjugate
                                                       : Compatibility::Incompatible;
        o.require(k == expected, "classify inconsistent with dim SE, trial " + std::to_string(t));
    }
    o.require(seen[0] > 0 && seen[1] > 0 && seen[2] > 0, "random pairs did not cover all three kinds");
    o.require(unequal == 0, "SE != ker[F,G] on " + std::to_string(unequal) + " of 60 random pairs; first: " +
                                first_unequal);
    return o;
}

Outcome enumeration() {
    Outcome o;
    const std::vector<std::size_t> bell{1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::size_t n = 1; n <= 8; ++n) {
        std::size_t count = 0;
        for (const auto& pi : enumerate_partitions(letter_ground(n))) {
            (void)pi;
            ++count;
        }
        const std::size_t expected = oracle::set_partitions(static_cast<int>(n)).size();
        o.require(count == bell[n - 1] && expected == bell[n - 1] && bell_number(n) == bell[n - 1],
                  "count mismatch at n=" + std::to_string(n));
    }
    return o;
}

Outcome csca_example() {
    Outcome o;
    GroundPtr g = make_ground({"a", "b", "c"});
    const Attribute f(g, {Rational(1), Rational(1), Rational(2)});
    const Attribute h(g, {Rational(1), Rational(2), Rational(2)});
    o.require(join(inverse_image_partition(f), inverse_image_partition(h)) == Partition::discrete(g),
              "levels of f, g do not join to 1_U");
    o.require(csca_complete({f, h}), "{f, g} not complete");
    const auto tuples = value_tuples({f, h});
    o.require(tuples[0] != tuples[1] && tuples[1] != tuples[2] && tuples[0] != tuples[2], "value tuples not distinct");
    for (const auto& single : {f, h}) {
        o.require(!inverse_image_partition(single).is_discrete(), "single attribute already discrete");
        o.require(!csca_complete({single}), "single attribute reported complete");
    }
    return o;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= report(1, "golden example, exact", 1.0, golden_example);
    ok &= report(2, "double-slit distributions, exact", 0, double_slit_distributions);
    ok &= report(3, "theorem suites, all pairs n<=5 x 100 p", 60.0, theorem_suites);
    ok &= report(4, "SE = ker[F,G] and classification", 0, se_equals_kernel);
    ok &= report(5, "Bell numbers n=1..8 against oracle", 10.0, enumeration);
    ok &= report(6, "CSCA completeness example", 0, csca_example);
    return ok ? 0 : 1;
}
