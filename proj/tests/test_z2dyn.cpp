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
#include "dits/z2dyn.hpp"

using namespace dits;

namespace {

GroundPtr abc() { return make_ground({"a", "b", "c"}); }
SubsetVector s(std::initializer_list<const char*> labels) {
    return SubsetVector::of_labels(abc(), std::vector<std::string>(labels.begin(), labels.end()));
}

}  // namespace

TEST(SubsetVector, AdditionIsSymmetricDifference) {
    EXPECT_EQ(add(s({"a", "b"}), s({"b", "c"})), s({"a", "c"}));
    EXPECT_EQ(add(s({"a", "b"}), s({"a", "b"})), s({}));
    EXPECT_EQ(add(s({"b"}), s({})), s({"b"}));
    EXPECT_EQ(s({"a", "c"}).to_string(), "{a,c}");
    EXPECT_THROW(add(s({"a"}), SubsetVector(make_ground({"x", "y", "z"}), 1)), Error);
}

TEST(GF2, Nonsingularity) {
    const DoubleSlitSetup setup = double_slit_setup();
    EXPECT_TRUE(is_nonsingular(setup.dynamics.map()));
    EXPECT_EQ(gf2_rank(setup.dynamics.map()), 3u);
    EXPECT_TRUE(is_nonsingular(GF2Map::identity(5)));
    const GF2Map twice = GF2Map::from_images({s({"a", "b"}), s({"a", "b"}), s({"c"})});
    EXPECT_FALSE(is_nonsingular(twice));
    try {
        Dynamics(abc(), twice);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularMap);
    }
}

TEST(GF2, InverseRoundTrip) {
    const Dynamics d = double_slit_setup().dynamics;
    EXPECT_EQ(compose(d.map(), d.inverse_map()), GF2Map::identity(3));
    EXPECT_EQ(compose(d.inverse_map(), d.map()), GF2Map::identity(3));
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        const SubsetVector x(abc(), bits);
        EXPECT_EQ(evolve(evolve(x, d), d.inverse()), x);
    }
}

TEST(GF2, RandomMapsLinearAndInvertible) {
    std::mt19937_64 rng(2);
    int nonsingular = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + t % 8;
        std::vector<std::uint64_t> cols(n);
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        for (auto& c : cols) c = rng() & mask;
        const GF2Map m(n, cols);
        const std::uint64_t x = rng() & mask, y = rng() & mask;
        EXPECT_EQ(m.apply(x ^ y), m.apply(x) ^ m.apply(y));
        if (!is_nonsingular(m)) {
            EXPECT_THROW(gf2_inverse(m), Error);
            continue;
        }
        ++nonsingular;
        EXPECT_EQ(gf2_inverse(m).apply(m.apply(x)), x);
    }
    EXPECT_GT(nonsingular, 30);
}

TEST(Evolve, DoubleSlitDynamics) {
    const Dynamics d = double_slit_setup().dynamics;
    EXPECT_EQ(evolve(s({"a", "c"}), d), s({"a", "c"}));
    EXPECT_EQ(evolve(s({"b"}), d), s({"a", "b", "c"}));
    EXPECT_EQ(evolve(s({"a"}), d), s({"a", "b"}));
    EXPECT_EQ(evolve(s({"c"}), d), s({"b", "c"}));
    EXPECT_EQ(evolve(s({}), d), s({}));
    EXPECT_THROW(evolve(SubsetVector(letter_ground(2), 1), d), Error);
}

TEST(Reduce, Examples) {
    const StateMixture ac = reduce(s({"a", "c"}));
    ASSERT_EQ(ac.components().size(), 2u);
    EXPECT_EQ(ac.components()[0].state, s({"a"}));
    EXPECT_EQ(ac.components()[0].probability, Rational(1, 2));
    EXPECT_EQ(ac.components()[1].probability, Rational(1, 2));
    EXPECT_EQ(reduce(s({"b"})), StateMixture::point(s({"b"})));
    const ProbGroundSet p(abc(), {Rational(1, 3), Rational(1, 4), Rational(5, 12)});
    const StateMixture ab = reduce(s({"a", "b"}), p);
    EXPECT_EQ(ab.components()[0].probability, Rational(4, 7));
    EXPECT_EQ(ab.components()[1].probability, Rational(3, 7));
    try {
        reduce(s({}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyState);
    }
}

TEST(Mixture, Validation) {
    EXPECT_THROW(StateMixture::from_components({{s({"a"}), Rational(1, 2)}}), Error);
    EXPECT_THROW(StateMixture::from_components({{s({"a"}), Rational(3, 2)}, {s({"b"}), Rational(-1, 2)}}), Error);
    const StateMixture merged =
        StateMixture::from_components({{s({"b"}), Rational(1, 4)}, {s({"a"}), Rational(1, 2)}, {s({"b"}), Rational(1, 4)}});
    ASSERT_EQ(merged.components().size(), 2u);
    EXPECT_EQ(merged.components()[1].probability, Rational(1, 2));
}

TEST(Pipeline, DoubleSlitCases) {
    EXPECT_EQ(double_slit(1), (std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)}));
    EXPECT_EQ(double_slit(2), (std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2)}));
    for (int c : {1, 2}) {
        Rational total = 0;
        for (const auto& x : double_slit(c)) total += x;
        EXPECT_EQ(total, 1);
    }
    EXPECT_THROW(double_slit(3), Error);
}

TEST(Pipeline, CaseOneIsTotalProbabilityOverScreenBranches) {
    const DoubleSlitSetup setup = double_slit_setup();
    const std::vector<PipelineStep> after_screen{EvolveStep{setup.dynamics}, DetectStep{}};
    const auto from_a = run_pipeline(s({"a"}), after_screen).singleton_distribution();
    const auto from_c = run_pipeline(s({"c"}), after_screen).singleton_distribution();
    const auto case1 = double_slit(1);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(case1[i], (from_a[i] + from_c[i]) / 2);
}

TEST(Pipeline, EmptyStepsAndMeasure) {
    EXPECT_EQ(run_pipeline(s({"a", "c"}), {}), StateMixture::point(s({"a", "c"})));
    const Partition by = Partition::from_block_ids(abc(), std::vector<std::size_t>{0, 0, 1});
    const StateMixture m = run_pipeline(s({"a", "b", "c"}), {MeasureStep{by}});
    ASSERT_EQ(m.components().size(), 2u);
    // Components are ordered by bit pattern: {a,b} = 0b011 before {c} = 0b100.
    EXPECT_EQ(m.components()[0].state, s({"a", "b"}));
    EXPECT_EQ(m.components()[0].probability, Rational(2, 3));
    EXPECT_EQ(m.components()[1].state, s({"c"}));
    EXPECT_EQ(m.components()[1].probability, Rational(1, 3));
}

TEST(Pipeline, SamplingConvergesAndIsSeeded) {
    const DoubleSlitSetup setup = double_slit_setup();
    const auto steps = double_slit_steps(1, setup);
    const auto x = sample_pipeline(setup.at_screen, steps, std::nullopt, 40000, 17);
    EXPECT_EQ(x, sample_pipeline(setup.at_screen, steps, std::nullopt, 40000, 17));
    EXPECT_NEAR(x.at(0b010) / 40000.0, 0.5, 0.01);
    EXPECT_NEAR(x.at(0b001) / 40000.0, 0.25, 0.01);
    const auto y = sample_pipeline(setup.at_screen, double_slit_steps(2, setup), std::nullopt, 5000, 3);
    EXPECT_EQ(y.count(0b010), 0u);
}
