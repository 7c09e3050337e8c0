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

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dits/error.hpp"
#include "dits/partition.hpp"

namespace dits {

/// Immutable partition-logic formula: variables, 0, 1, join, meet, implication.
class Formula {
public:
    enum class Kind { Var, Top, Bottom, Join, Meet, Implies };

    static Formula var(std::string name);
    static Formula top();
    static Formula bottom();
    static Formula join(Formula lhs, Formula rhs);
    static Formula meet(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    bool is_binary() const noexcept { return lhs_ != nullptr; }
    const Formula& lhs() const { return *lhs_; }
    const Formula& rhs() const { return *rhs_; }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    Formula(Kind kind, std::string name, std::shared_ptr<const Formula> lhs, std::shared_ptr<const Formula> rhs);

    Kind kind_;
    std::string name_;
    std::shared_ptr<const Formula> lhs_;
    std::shared_ptr<const Formula> rhs_;
};

/// Grammar, loosest binding first:
///
///     implies := join ( ("=>" | "⇒") implies )?     right associative
///     join    := meet ( ("\/" | "∨") meet )*        left associative
///     meet    := atom ( ("/\" | "∧") atom )*        left associative
///     atom    := IDENT | "0" | "1" | "(" implies ")"
///
/// IDENT is [a-zA-Z][a-zA-Z0-9_]*. Throws ParseError.
Formula parse_formula(std::string_view text);

/// ASCII rendering with the fewest parentheses that still parse back to `f`.
std::string to_string(const Formula& f);

/// Distinct variable names, sorted.
std::vector<std::string> variables(const Formula& f);

using Assignment = std::map<std::string, Partition>;

/// Evaluates bottom-up with join, meet and implication on `ground`.
/// Throws UnboundVariable or GroundMismatch.
Partition eval(const Formula& f, const Assignment& assignment, const GroundPtr& ground);

/// Two-element Boolean reading: join = or, meet = and, s => t = (not s) or t.
bool eval_boolean(const Formula& f, const std::map<std::string, bool>& assignment);

/// First falsifying Boolean assignment in binary counting order, if any.
/// Anything classically invalid is also invalid as a partition formula.
std::optional<std::map<std::string, bool>> classical_counterexample(const Formula& f);

struct Counterexample {
    std::size_t n = 0;
    std::vector<std::pair<std::string, Partition>> assignment;
    Partition result;
};

struct ValidityReport {
    enum class Status { ValidUpToBound, Counterexample };

    Status status = Status::ValidUpToBound;
    /// Largest ground-set size fully checked (or where the witness was found).
    std::size_t bound = 0;
    std::optional<Counterexample> witness;
};

struct ValidityOptions {
    std::size_t max_n = 4;
    /// Ceiling on the total number of assignments evaluated across all n.
    std::size_t budget = 20'000'000;
    std::size_t threads = 1;
};

/// Thrown when the next ground-set size would exceed the budget; `reached`
/// is the largest n that was fully searched (1 if none).
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t reached, const std::string& message);
    std::size_t reached() const noexcept { return reached_; }

private:
    std::size_t reached_;
};

/// Bounded validity search on grounds of size 2..max_n. Assignments are
/// visited with the first variable (alphabetically) most significant and each
/// variable ranging over partitions in restricted-growth-string order, so
/// the reported witness is the least one for the least n. Multi-threaded runs
/// return the same report as sequential ones.
///
/// A Valid result only means no counterexample exists up to `max_n`.
ValidityReport check_validity(const Formula& f, const ValidityOptions& options = {});

}  // namespace dits
