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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dits/partition.hpp"

namespace dits {

/// The non-negative real √q for a rational q ≥ 0, stored by its radicand.
///
/// Closed under products and under scaling by non-negative rationals, which
/// is all a partition density matrix ever needs. Two values are equal iff
/// their radicands are.
class SqrtRational {
public:
    SqrtRational() = default;
    /// Throws Error(InvalidArgument) for a negative radicand.
    explicit SqrtRational(Rational radicand);
    /// The rational r ≥ 0 itself, i.e. √(r²).
    static SqrtRational of_rational(const Rational& r);

    const Rational& radicand() const noexcept { return radicand_; }
    bool is_zero() const { return radicand_ == 0; }

    /// The square, which is always rational.
    const Rational& squared() const noexcept { return radicand_; }
    /// Exact value when the radicand is a perfect rational square.
    std::optional<Rational> as_rational() const { return exact_sqrt(radicand_); }

    /// c with this = c·unit when such a rational exists (unit must be non-zero).
    std::optional<Rational> ratio_to(const SqrtRational& unit) const;

    SqrtRational scaled(const Rational& factor) const;
    double to_double() const;

    /// "1/3" when rational, otherwise "sqrt(5/48)".
    std::string to_string() const;

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        return SqrtRational(Rational(a.radicand_ * b.radicand_));
    }
    friend bool operator==(const SqrtRational& a, const SqrtRational& b) { return a.radicand_ == b.radicand_; }

private:
    Rational radicand_ = 0;
};

/// Rational combination sum_t c_t √(q_t) and the unit it is expressed in.
/// Returns c with sum = c·√unit, or nullopt when some non-zero term is not a
/// rational multiple of √unit. Terms are non-negative, so incommensurable
/// surds cannot cancel and the answer is exact. A zero unit accepts only an
/// all-zero sum (reported as c = 0).
std::optional<Rational> sum_in_units(const std::vector<SqrtRational>& terms, const SqrtRational& unit);

/// Diagonal 0/1 projection P_S onto an index subset S.
class ProjectionMask {
public:
    ProjectionMask(std::size_t n, std::vector<std::size_t> indices);
    static ProjectionMask full(std::size_t n);

    std::size_t dimension() const noexcept { return n_; }
    bool contains(std::size_t i) const { return member_.at(i); }
    std::vector<std::size_t> indices() const;
    ProjectionMask complement() const;

    friend bool operator==(const ProjectionMask& a, const ProjectionMask& b) { return a.member_ == b.member_; }

private:
    std::size_t n_;
    std::vector<bool> member_;
};

struct LudersOutcome;

/// Symmetric matrix with √-rational entries and exact unit trace.
///
/// Every entry (i, k) has radicand d_i·d_k or 0, where d_i is the rational
/// diagonal value; for ρ(π) the d_i are the point probabilities.
class DensityMatrix {
public:
    /// Row-major radicands. Throws Error(InvalidDensity) unless the matrix is
    /// symmetric with rational diagonal summing to 1 and every off-diagonal
    /// radicand in {0, d_i·d_k}.
    DensityMatrix(GroundPtr ground, std::vector<Rational> radicands);

    const GroundSet& ground() const noexcept { return *ground_; }
    const GroundPtr& ground_ptr() const noexcept { return ground_; }
    std::size_t dimension() const noexcept { return n_; }

    const Rational& radicand(std::size_t i, std::size_t k) const { return radicands_[i * n_ + k]; }
    SqrtRational entry(std::size_t i, std::size_t k) const { return SqrtRational(radicand(i, k)); }
    const Rational& diagonal(std::size_t i) const { return diagonal_.at(i); }
    Rational trace() const;

    friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) {
        return a.n_ == b.n_ && a.radicands_ == b.radicands_ && same_ground(a.ground_, b.ground_);
    }

private:
    struct Unchecked {};
    DensityMatrix(Unchecked, GroundPtr ground, std::vector<Rational> radicands, std::vector<Rational> diagonal);

    friend DensityMatrix rho(const Partition&, const ProbGroundSet&);
    friend DensityMatrix luders_mixture(const DensityMatrix&, const Partition&);
    friend LudersOutcome luders_rule(const DensityMatrix&, const ProjectionMask&);

    GroundPtr ground_;
    std::size_t n_;
    std::vector<Rational> radicands_;
    std::vector<Rational> diagonal_;
};

/// ρ(π): entry (i, k) is √(p_i p_k) when i and k share a block, else 0.
DensityMatrix rho(const Partition& pi, const ProbGroundSet& p);

/// |b_j⟩ with entries √(p_i / Pr(B_j)) on B_j and 0 elsewhere.
std::vector<SqrtRational> block_vector(const Partition& pi, const ProbGroundSet& p, std::size_t block);

/// Checks ρ(π)|b_j⟩ = Pr(B_j)|b_j⟩ for every block and ⟨b_j'|b_j⟩ = δ_jj', exactly.
bool verify_block_eigenvectors(const Partition& pi, const ProbGroundSet& p);

/// Σ_B P_B ρ P_B over the blocks B of sigma: keeps entry (i, k) iff i and k
/// share a sigma block.
DensityMatrix luders_mixture(const DensityMatrix& rho, const Partition& sigma);

struct LudersOutcome {
    DensityMatrix state;
    Rational probability;
};

/// P ρ P / tr[P ρ P] together with tr[P ρ P]. Throws ZeroProbabilityOutcome.
LudersOutcome luders_rule(const DensityMatrix& rho, const ProjectionMask& outcome);

struct MeasurementOutcome {
    std::size_t block = 0;
    ProjectionMask mask;
    LudersOutcome result;
};

/// Lüders rule for every block of sigma, in canonical block order.
std::vector<MeasurementOutcome> measurement_outcomes(const DensityMatrix& rho, const Partition& sigma);

/// h(ρ) = 1 - tr[ρ²] = 1 - Σ_{i,k} radicand(i, k).
Rational quantum_logical_entropy(const DensityMatrix& rho);

/// Off-diagonal non-zero entries of rho lying across different sigma blocks,
/// in row-major order. Exactly these are zeroed by luders_mixture.
std::vector<std::pair<std::size_t, std::size_t>> state_reduction_audit(const DensityMatrix& rho,
                                                                        const Partition& sigma);

/// luders_mixture(ρ(π), σ) == ρ(π ∨ σ).
bool theorem_join(const Partition& pi, const Partition& sigma, const ProbGroundSet& p);

/// h(ρ̂) - h(ρ) equals the sum of squares of the entries zeroed by measuring.
bool theorem_entropy_increase(const Partition& pi, const Partition& sigma, const ProbGroundSet& p);

/// h(ρ(π)) == h(π).
bool consistency_h(const Partition& pi, const ProbGroundSet& p);

}  // namespace dits
