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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dits/partition.hpp"

namespace dits {

inline constexpr std::size_t kMaxGf2Dimension = 64;

/// A subset of U read as a vector in Z_2^n; addition is symmetric difference.
class SubsetVector {
public:
    /// Throws Error(InvalidArgument) for a ground set larger than 64.
    SubsetVector(GroundPtr ground, std::uint64_t bits = 0);
    static SubsetVector of(GroundPtr ground, const std::vector<std::size_t>& members);
    /// Looks up labels; throws Error(UnknownLabel).
    static SubsetVector of_labels(GroundPtr ground, const std::vector<std::string>& labels);

    const GroundSet& ground() const noexcept { return *ground_; }
    const GroundPtr& ground_ptr() const noexcept { return ground_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    bool empty() const noexcept { return bits_ == 0; }
    std::size_t count() const;
    std::vector<std::size_t> members() const;

    /// "{a,c}".
    std::string to_string() const;

    friend bool operator==(const SubsetVector& a, const SubsetVector& b) {
        return a.bits_ == b.bits_ && same_ground(a.ground_, b.ground_);
    }

private:
    GroundPtr ground_;
    std::uint64_t bits_;
};

/// S + T = (S - T) ∪ (T - S). Throws GroundMismatch.
SubsetVector add(const SubsetVector& s, const SubsetVector& t);

/// Linear map on Z_2^n stored by columns: column j is the image of {u_j}.
class GF2Map {
public:
    GF2Map(std::size_t n, std::vector<std::uint64_t> columns);
    static GF2Map identity(std::size_t n);
    /// Map sending {u_j} to images[j].
    static GF2Map from_images(const std::vector<SubsetVector>& images);

    std::size_t dimension() const noexcept { return n_; }
    std::uint64_t column(std::size_t j) const { return columns_.at(j); }
    bool entry(std::size_t row, std::size_t col) const { return (columns_.at(col) >> row) & 1U; }

    /// Matrix-vector product over GF(2).
    std::uint64_t apply(std::uint64_t v) const;

    friend bool operator==(const GF2Map& a, const GF2Map& b) { return a.columns_ == b.columns_; }

private:
    std::size_t n_;
    std::vector<std::uint64_t> columns_;
};

/// Rank by Gaussian elimination over GF(2).
std::size_t gf2_rank(const GF2Map& m);
bool is_nonsingular(const GF2Map& m);
/// Throws Error(SingularMap).
GF2Map gf2_inverse(const GF2Map& m);
GF2Map compose(const GF2Map& outer, const GF2Map& inner);

/// Nonsingular GF(2) map on a ground set, carrying its inverse as the
/// invertibility certificate.
class Dynamics {
public:
    /// Throws Error(SingularMap) or Error(DimensionMismatch).
    Dynamics(GroundPtr ground, GF2Map map);

    const GroundPtr& ground_ptr() const noexcept { return ground_; }
    const GF2Map& map() const noexcept { return map_; }
    const GF2Map& inverse_map() const noexcept { return inverse_; }
    Dynamics inverse() const { return Dynamics(ground_, inverse_); }

private:
    GroundPtr ground_;
    GF2Map map_;
    GF2Map inverse_;
};

/// Throws DimensionMismatch or GroundMismatch.
SubsetVector evolve(const SubsetVector& s, const Dynamics& dynamics);

struct MixtureComponent {
    SubsetVector state;
    Rational probability;
};

/// Exact mixture of distinct subset states, sorted by bit pattern, with
/// positive probabilities summing to one.
class StateMixture {
public:
    static StateMixture point(const SubsetVector& s);
    /// Merges duplicate states by adding their probabilities and drops zero
    /// weights. Throws Error(InvalidProbability) unless the total is 1.
    static StateMixture from_components(std::vector<MixtureComponent> components);

    const std::vector<MixtureComponent>& components() const noexcept { return components_; }
    const GroundPtr& ground_ptr() const { return components_.front().state.ground_ptr(); }
    Rational total() const;

    /// Probability of each singleton {u_i}, including zeros; the mixture must
    /// consist of singletons only (Error(InvalidArgument) otherwise).
    std::vector<Rational> singleton_distribution() const;

    friend bool operator==(const StateMixture& a, const StateMixture& b);

private:
    std::vector<MixtureComponent> components_;
};

/// Collapse onto the singletons of s, weighted by p_i / Pr(s) or uniformly
/// when p is absent. Throws Error(EmptyState).
StateMixture reduce(const SubsetVector& s, const std::optional<ProbGroundSet>& p = std::nullopt);

struct EvolveStep {
    Dynamics dynamics;
};
struct MeasureStep {
    Partition by;
};
struct DetectStep {};

using PipelineStep = std::variant<EvolveStep, MeasureStep, DetectStep>;

/// Propagates a mixture through the steps. Evolve acts on each component;
/// Measure splits each component over the blocks of the partition it meets
/// with conditional probabilities; Detect reduces each component to singletons.
StateMixture run_pipeline(const SubsetVector& initial, const std::vector<PipelineStep>& steps,
                          const std::optional<ProbGroundSet>& p = std::nullopt);

/// Monte Carlo version of run_pipeline: counts the final state of `trials`
/// independent runs. Deterministic for a given seed.
std::map<std::uint64_t, std::size_t> sample_pipeline(const SubsetVector& initial,
                                                      const std::vector<PipelineStep>& steps,
                                                      const std::optional<ProbGroundSet>& p, std::size_t trials,
                                                      std::uint64_t seed);

/// Three positions a, b, c with {a} -> {a,b}, {b} -> {a,b,c}, {c} -> {b,c}.
struct DoubleSlitSetup {
    GroundPtr ground;
    Dynamics dynamics;
    SubsetVector at_screen;  // {a, c}: both slits
};

DoubleSlitSetup double_slit_setup();

/// Case 1 detects at the slits before evolving; case 2 evolves the
/// superposition. Both then detect at the wall.
std::vector<PipelineStep> double_slit_steps(int which_case, const DoubleSlitSetup& setup);

/// Exact wall distribution over (a, b, c). Throws Error(InvalidArgument)
/// unless which_case is 1 or 2.
std::vector<Rational> double_slit(int which_case);

}  // namespace dits
