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

#include "dits/error.hpp"
#include "dits/logic.hpp"
#include "dits/notation.hpp"
#include "oracles.hpp"

using namespace dits;

TEST(Parser, Grammar) {
    EXPECT_EQ(parse_formula("s => (s \\/ p)"),
              Formula::implies(Formula::var("s"), Formula::join(Formula::var("s"), Formula::var("p"))));
    EXPECT_EQ(parse_formula("s /\\ p \\/ q"),
              Formula::join(Formula::meet(Formula::var("s"), Formula::var("p")), Formula::var("q")));
    EXPECT_EQ(parse_formula("a => b => c"),
              Formula::implies(Formula::var("a"), Formula::implies(Formula::var("b"), Formula::var("c"))));
    EXPECT_EQ(parse_formula("s ∧ p ∨ 1 ⇒ 0"), parse_formula("((s /\\ p) \\/ 1) => 0"));
    EXPECT_EQ(parse_formula("x_1 => X2"), Formula::implies(Formula::var("x_1"), Formula::var("X2")));
}

TEST(Parser, PrintsMinimalParentheses) {
    for (const char* text : {"s => s \\/ p", "(a => b) => c", "a /\\ (b \\/ c)", "a \\/ b /\\ c", "1 => 0"}) {
        const Formula f = parse_formula(text);
        EXPECT_EQ(to_string(f), text);
        EXPECT_EQ(parse_formula(to_string(f)), f);
    }
}

TEST(Parser, ErrorsCarryTokenPosition) {
    try {
        parse_formula("s => => p");
        FAIL() << "expected a syntax error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
        EXPECT_EQ(e.token_index(), 2u);
        EXPECT_EQ(e.offset(), 5u);
    }
    EXPECT_THROW(parse_formula(""), ParseError);
    EXPECT_THROW(parse_formula("(a"), ParseError);
    EXPECT_THROW(parse_formula("a b"), ParseError);
    EXPECT_THROW(parse_formula("a & b"), ParseError);
}

TEST(Eval, Examples) {
    GroundPtr g = letter_ground(3);
    for (const auto& s : all_partitions(g)) {
        EXPECT_EQ(eval(parse_formula("s => s"), {{"s", s}}, g), Partition::discrete(g));
        for (const auto& p : all_partitions(g)) {
            EXPECT_EQ(eval(parse_formula("p => (p \\/ s)"), {{"p", p}, {"s", s}}, g), Partition::discrete(g));
        }
    }
    GroundPtr two = letter_ground(2);
    EXPECT_EQ(eval(parse_formula("p => (p /\\ s)"),
                   {{"p", Partition::discrete(two)}, {"s", Partition::indiscrete(two)}}, two),
              Partition::indiscrete(two));
    EXPECT_EQ(eval(parse_formula("1"), {}, g), Partition::discrete(g));
    EXPECT_EQ(eval(parse_formula("0"), {}, g), Partition::indiscrete(g));
}

TEST(Eval, UnboundVariable) {
    GroundPtr g = letter_ground(2);
    try {
        eval(parse_formula("p \\/ q"), {{"p", Partition::discrete(g)}}, g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnboundVariable);
    }
}

// Operators against the pair-set oracle on every pair for n = 4.
TEST(Eval, OperatorsAgreeWithDitsetOracle) {
    GroundPtr g = letter_ground(4);
    const auto all = all_partitions(g);
    const Formula j = parse_formula("p \\/ q");
    const Formula imp = parse_formula("q => p");
    for (const auto& p : all) {
        for (const auto& q : all) {
            const Assignment a{{"p", p}, {"q", q}};
            auto u = oracle::dits_of(p);
            const auto v = oracle::dits_of(q);
            u.insert(v.begin(), v.end());
            EXPECT_EQ(oracle::dits_of(eval(j, a, g)), u);
            EXPECT_EQ(eval(imp, a, g) == Partition::discrete(g), oracle::refines(q, p));
        }
    }
}

TEST(Validity, ValidFormulas) {
    for (std::size_t max_n = 2; max_n <= 5; ++max_n) {
        for (const char* text : {"s => s", "p => (p \\/ s)"}) {
            const auto r = check_validity(parse_formula(text), {max_n, 20'000'000, 1});
            EXPECT_EQ(r.status, ValidityReport::Status::ValidUpToBound) << text;
            EXPECT_EQ(r.bound, max_n);
            EXPECT_FALSE(r.witness.has_value());
        }
    }
}

TEST(Validity, CounterexampleIsLeast) {
    const auto r = check_validity(parse_formula("p => (p /\\ s)"));
    ASSERT_EQ(r.status, ValidityReport::Status::Counterexample);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->n, 2u);
    EXPECT_EQ(r.bound, 2u);
    GroundPtr two = letter_ground(2);
    // Variables in alphabetical order, p most significant.
    ASSERT_EQ(r.witness->assignment.size(), 2u);
    EXPECT_EQ(r.witness->assignment[0].first, "p");
    EXPECT_EQ(r.witness->assignment[0].second, Partition::discrete(two));
    EXPECT_EQ(r.witness->assignment[1].second, Partition::indiscrete(two));
    EXPECT_EQ(r.witness->result, Partition::indiscrete(two));
}

TEST(Validity, ExcludedMiddleFailsOnlyFromThreeElements) {
    const auto r = check_validity(parse_formula("p \\/ (p => 0)"));
    ASSERT_EQ(r.status, ValidityReport::Status::Counterexample);
    EXPECT_EQ(r.witness->n, 3u);
    EXPECT_EQ(format_partition(r.witness->assignment[0].second), "ab|c");
    EXPECT_NE(r.witness->result, Partition::discrete(letter_ground(3)));
    EXPECT_FALSE(classical_counterexample(parse_formula("p \\/ (p => 0)")).has_value());
}

TEST(Validity, ThreadedMatchesSequential) {
    for (const char* text : {"p => (p /\\ s)", "p \\/ (p => 0)", "((s => p) => s) => s", "(a => b) \\/ (b => c)",
                             "a /\\ b => c"}) {
        const Formula f = parse_formula(text);
        const auto seq = check_validity(f, {4, 20'000'000, 1});
        for (std::size_t t : {2u, 3u, 8u}) {
            const auto par = check_validity(f, {4, 20'000'000, t});
            EXPECT_EQ(par.status, seq.status) << text;
            EXPECT_EQ(par.bound, seq.bound);
            ASSERT_EQ(par.witness.has_value(), seq.witness.has_value());
            if (seq.witness) {
                EXPECT_EQ(par.witness->n, seq.witness->n);
                EXPECT_EQ(par.witness->assignment, seq.witness->assignment);
                EXPECT_EQ(par.witness->result, seq.witness->result);
            }
        }
    }
}

TEST(Validity, BudgetReportsReachedBound) {
    try {
        check_validity(parse_formula("s => s"), {5, 10, 1});
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
        EXPECT_EQ(e.reached(), 3u);
    }
}

TEST(Boolean, ClassicalCrossCheck) {
    EXPECT_TRUE(eval_boolean(parse_formula("p => p \\/ q"), {{"p", true}, {"q", false}}));
    EXPECT_FALSE(eval_boolean(parse_formula("1 => 0"), {}));
    const auto cex = classical_counterexample(parse_formula("p => q"));
    ASSERT_TRUE(cex.has_value());
    EXPECT_TRUE(cex->at("p"));
    EXPECT_FALSE(cex->at("q"));
    // Every partition-valid formula is classically valid: {0_U, 1_U} is a Boolean subalgebra.
    EXPECT_FALSE(classical_counterexample(parse_formula("s => s")).has_value());
    EXPECT_FALSE(classical_counterexample(parse_formula("((s => p) => s) => s")).has_value());
}

TEST(Formula, Variables) {
    EXPECT_EQ(variables(parse_formula("z => a \\/ m /\\ a")), (std::vector<std::string>{"a", "m", "z"}));
}
