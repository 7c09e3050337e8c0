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

#include "dits/density.hpp"

#include <cmath>
#include "dits/entropy.hpp"
#include "dits/error.hpp"

namespace dits {

// ------------------------------------------------------------- SqrtRational

SqrtRational::SqrtRational(Rational radicand) : radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw Error(ErrorKind::InvalidArgument, "negative radicand " + dits::to_string(radicand_));
}

SqrtRational SqrtRational::of_rational(const Rational& r) {
    if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative value " + dits::to_string(r));
    return SqrtRational(Rational(r * r));
}

std::optional<Rational> SqrtRational::ratio_to(const SqrtRational& unit) const {
    if (unit.is_zero()) throw Error(ErrorKind::InvalidArgument, "ratio to a zero unit");
    return exact_sqrt(Rational(radicand_ / unit.radicand_));
}

SqrtRational SqrtRational::scaled(const Rational& factor) const {
    if (factor < 0) throw Error(ErrorKind::InvalidArgument, "negative scale factor");
    return SqrtRational(Rational(radicand_ * factor * factor));
}

double SqrtRational::to_double() const {
    return std::sqrt(radicand_.get_d());
}

std::string SqrtRational::to_string() const {
    if (auto r = as_rational()) return dits::to_string(*r);
    return "sqrt(" + dits::to_string(radicand_) + ")";
}

std::optional<Rational> sum_in_units(const std::vector<SqrtRational>& terms, const SqrtRational& unit) {
    Rational coefficient = 0;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        if (unit.is_zero()) return std::nullopt;
        auto c = t.ratio_to(unit);
        if (!c) return std::nullopt;
        coefficient += *c;
    }
    return coefficient;
}

// ----------------------------------------------------------- ProjectionMask

ProjectionMask::ProjectionMask(std::size_t n, std::vector<std::size_t> indices) : n_(n), member_(n, false) {
    for (std::size_t i : indices) {
        if (i >= n) throw Error(ErrorKind::DimensionMismatch, "mask index " + std::to_string(i) + " out of range");
        member_[i] = true;
    }
}

ProjectionMask ProjectionMask::full(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return ProjectionMask(n, std::move(all));
}

std::vector<std::size_t> ProjectionMask::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (member_[i]) out.push_back(i);
    }
    return out;
}

ProjectionMask ProjectionMask::complement() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!member_[i]) out.push_back(i);
    }
    return ProjectionMask(n_, std::move(out));
}

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(GroundPtr ground, std::vector<Rational> radicands)
    : ground_(std::move(ground)), n_(ground_->size()), radicands_(std::move(radicands)) {
    if (radicands_.size() != n_ * n_) {
        throw Error(ErrorKind::InvalidDensity, "expected " + std::to_string(n_ * n_) + " entries");
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        auto d = exact_sqrt(radicand(i, i));
        if (!d) throw Error(ErrorKind::InvalidDensity, "diagonal entry " + std::to_string(i) + " is not rational");
        diagonal_.push_back(*d);
        trace += *d;
    }
    if (trace != 1) throw Error(ErrorKind::InvalidDensity, "trace is " + dits::to_string(trace));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const Rational& r = radicand(i, k);
            if (r != radicand(k, i)) throw Error(ErrorKind::InvalidDensity, "matrix is not symmetric");
            if (r != 0 && r != diagonal_[i] * diagonal_[k]) {
                throw Error(ErrorKind::InvalidDensity, "entry (" + std::to_string(i) + "," + std::to_string(k) +
                                                           ") is neither 0 nor sqrt(d_i d_k)");
            }
        }
    }
}

DensityMatrix::DensityMatrix(Unchecked, GroundPtr ground, std::vector<Rational> radicands,
                             std::vector<Rational> diagonal)
    : ground_(std::move(ground)),
      n_(ground_->size()),
      radicands_(std::move(radicands)),
      diagonal_(std::move(diagonal)) {}

Rational DensityMatrix::trace() const {
    Rational total = 0;
    for (const auto& d : diagonal_) total += d;
    return total;
}

DensityMatrix rho(const Partition& pi, const ProbGroundSet& p) {
    require_same_ground(pi.ground_ptr(), p.ground_ptr());
    const std::size_t n = pi.size();
    std::vector<Rational> radicands(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (pi.same_block(i, k)) radicands[i * n + k] = p.p(i) * p.p(k);
        }
    }
    return DensityMatrix(DensityMatrix::Unchecked{}, pi.ground_ptr(), std::move(radicands), p.probs());
}

std::vector<SqrtRational> block_vector(const Partition& pi, const ProbGroundSet& p, std::size_t block) {
    require_same_ground(pi.ground_ptr(), p.ground_ptr());
    const auto& members = pi.blocks().at(block);
    const Rational mass = p.mass(members);
    std::vector<SqrtRational> v(pi.size());
    for (std::size_t i : members) v[i] = SqrtRational(Rational(p.p(i) / mass));
    return v;
}

bool verify_block_eigenvectors(const Partition& pi, const ProbGroundSet& p) {
    const DensityMatrix state = rho(pi, p);
    const std::size_t n = pi.size();
    std::vector<std::vector<SqrtRational>> vectors;
    for (std::size_t b = 0; b < pi.block_count(); ++b) vectors.push_back(block_vector(pi, p, b));

    for (std::size_t b = 0; b < vectors.size(); ++b) {
        const Rational eigenvalue = p.mass(pi.blocks()[b]);
        const auto& v = vectors[b];
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<SqrtRational> terms;
            for (std::size_t k = 0; k < n; ++k) terms.push_back(state.entry(i, k) * v[k]);
            // Component i must be eigenvalue * v[i].
            if (v[i].is_zero()) {
                if (!sum_in_units(terms, v[i])) return false;
                continue;
            }
            auto c = sum_in_units(terms, v[i]);
            if (!c || *c != eigenvalue) return false;
        }
    }
    static const SqrtRational one(Rational(1));
    for (std::size_t a = 0; a < vectors.size(); ++a) {
        for (std::size_t b = 0; b < vectors.size(); ++b) {
            std::vector<SqrtRational> terms;
            for (std::size_t i = 0; i < n; ++i) terms.push_back(vectors[a][i] * vectors[b][i]);
            auto c = sum_in_units(terms, one);
            if (!c || *c != (a == b ? 1 : 0)) return false;
        }
    }
    return true;
}

DensityMatrix luders_mixture(const DensityMatrix& state, const Partition& sigma) {
    require_same_ground(state.ground_ptr(), sigma.ground_ptr());
    const std::size_t n = state.dimension();
    std::vector<Rational> radicands(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (sigma.same_block(i, k)) radicands[i * n + k] = state.radicand(i, k);
        }
    }
    // Diagonal survives every block projection, so the trace is unchanged.
    return DensityMatrix(DensityMatrix::Unchecked{}, state.ground_ptr(), std::move(radicands), state.diagonal_);
}

LudersOutcome luders_rule(const DensityMatrix& state, const ProjectionMask& outcome) {
    const std::size_t n = state.dimension();
    if (outcome.dimension() != n) throw Error(ErrorKind::DimensionMismatch, "projection and state sizes differ");
    Rational probability = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (outcome.contains(i)) probability += state.diagonal(i);
    }
    if (probability == 0) throw Error(ErrorKind::ZeroProbabilityOutcome, "tr[P rho P] = 0");
    const Rational scale = probability * probability;
    std::vector<Rational> radicands(n * n);
    std::vector<Rational> diagonal(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!outcome.contains(i)) continue;
        diagonal[i] = state.diagonal(i) / probability;
        for (std::size_t k = 0; k < n; ++k) {
            if (outcome.contains(k)) radicands[i * n + k] = state.radicand(i, k) / scale;
        }
    }
    return {DensityMatrix(DensityMatrix::Unchecked{}, state.ground_ptr(), std::move(radicands), std::move(diagonal)),
            probability};
}

std::vector<MeasurementOutcome> measurement_outcomes(const DensityMatrix& state, const Partition& sigma) {
    require_same_ground(state.ground_ptr(), sigma.ground_ptr());
    std::vector<MeasurementOutcome> out;
    for (std::size_t b = 0; b < sigma.block_count(); ++b) {
        ProjectionMask mask(state.dimension(), sigma.blocks()[b]);
        out.push_back({b, mask, luders_rule(state, mask)});
    }
    return out;
}

Rational quantum_logical_entropy(const DensityMatrix& state) {
    Rational purity = 0;
    const std::size_t n = state.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) purity += state.radicand(i, k);
    }
    return 1 - purity;
}

std::vector<std::pair<std::size_t, std::size_t>> state_reduction_audit(const DensityMatrix& state,
                                                                        const Partition& sigma) {
    require_same_ground(state.ground_ptr(), sigma.ground_ptr());
    std::vector<std::pair<std::size_t, std::size_t>> zeroed;
    const std::size_t n = state.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i != k && state.radicand(i, k) != 0 && sigma.is_dit(i, k)) zeroed.emplace_back(i, k);
        }
    }
    return zeroed;
}

bool theorem_join(const Partition& pi, const Partition& sigma, const ProbGroundSet& p) {
    return luders_mixture(rho(pi, p), sigma) == rho(join(pi, sigma), p);
}

bool theorem_entropy_increase(const Partition& pi, const Partition& sigma, const ProbGroundSet& p) {
    const DensityMatrix before = rho(pi, p);
    const DensityMatrix after = luders_mixture(before, sigma);
    Rational zeroed_squares = 0;
    for (const auto& [i, k] : state_reduction_audit(before, sigma)) zeroed_squares += before.entry(i, k).squared();
    return quantum_logical_entropy(after) - quantum_logical_entropy(before) == zeroed_squares;
}

bool consistency_h(const Partition& pi, const ProbGroundSet& p) {
    return quantum_logical_entropy(rho(pi, p)) == logical_entropy(pi, p);
}

}  // namespace dits
