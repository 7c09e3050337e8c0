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

#include "dits/z2dyn.hpp"

#include <algorithm>
#include <bit>

#include "dits/error.hpp"
#include "dits/notation.hpp"

namespace dits {

// ------------------------------------------------------------- SubsetVector

SubsetVector::SubsetVector(GroundPtr ground, std::uint64_t bits) : ground_(std::move(ground)), bits_(bits) {
    const std::size_t n = ground_->size();
    if (n > kMaxGf2Dimension) throw Error(ErrorKind::InvalidArgument, "GF(2) states support at most 64 elements");
    if (n < 64 && (bits_ >> n) != 0) throw Error(ErrorKind::DimensionMismatch, "bits outside the ground set");
}

SubsetVector SubsetVector::of(GroundPtr ground, const std::vector<std::size_t>& members) {
    std::uint64_t bits = 0;
    for (std::size_t i : members) {
        if (i >= ground->size()) throw Error(ErrorKind::DimensionMismatch, "member index out of range");
        bits |= std::uint64_t{1} << i;
    }
    return SubsetVector(std::move(ground), bits);
}

SubsetVector SubsetVector::of_labels(GroundPtr ground, const std::vector<std::string>& labels) {
    std::vector<std::size_t> members;
    for (const auto& label : labels) {
        auto idx = ground->index_of(label);
        if (!idx) throw Error(ErrorKind::UnknownLabel, "'" + label + "' is not in the ground set");
        members.push_back(*idx);
    }
    return of(std::move(ground), members);
}

std::size_t SubsetVector::count() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> SubsetVector::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ground_->size(); ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string SubsetVector::to_string() const {
    return format_subset(*ground_, members());
}

SubsetVector add(const SubsetVector& s, const SubsetVector& t) {
    require_same_ground(s.ground_ptr(), t.ground_ptr());
    return SubsetVector(s.ground_ptr(), s.bits() ^ t.bits());
}

// ------------------------------------------------------------------- GF2Map

GF2Map::GF2Map(std::size_t n, std::vector<std::uint64_t> columns) : n_(n), columns_(std::move(columns)) {
    if (n_ > kMaxGf2Dimension) throw Error(ErrorKind::InvalidArgument, "GF(2) maps support at most 64 dimensions");
    if (columns_.size() != n_) throw Error(ErrorKind::DimensionMismatch, "GF(2) map must be square");
    for (auto c : columns_) {
        if (n_ < 64 && (c >> n_) != 0) throw Error(ErrorKind::DimensionMismatch, "column has bits beyond n");
    }
}

GF2Map GF2Map::identity(std::size_t n) {
    std::vector<std::uint64_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = std::uint64_t{1} << j;
    return GF2Map(n, std::move(cols));
}

GF2Map GF2Map::from_images(const std::vector<SubsetVector>& images) {
    std::vector<std::uint64_t> cols;
    for (const auto& img : images) {
        require_same_ground(images.front().ground_ptr(), img.ground_ptr());
        cols.push_back(img.bits());
    }
    if (!images.empty() && images.front().ground().size() != images.size()) {
        throw Error(ErrorKind::DimensionMismatch, "need one image per ground element");
    }
    return GF2Map(images.size(), std::move(cols));
}

std::uint64_t GF2Map::apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        if ((v >> j) & 1U) out ^= columns_[j];
    }
    return out;
}

std::size_t gf2_rank(const GF2Map& m) {
    std::vector<std::uint64_t> rows = [&] {
        std::vector<std::uint64_t> cols;
        for (std::size_t j = 0; j < m.dimension(); ++j) cols.push_back(m.column(j));
        return cols;
    }();
    // Column rank equals row rank; eliminate on the column vectors directly.
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < m.dimension(); ++bit) {
        const std::uint64_t mask = std::uint64_t{1} << bit;
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                  [&](std::uint64_t r) { return r & mask; });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

bool is_nonsingular(const GF2Map& m) {
    return gf2_rank(m) == m.dimension();
}

GF2Map gf2_inverse(const GF2Map& m) {
    const std::size_t n = m.dimension();
    // Row r of M as a bit mask over columns, augmented with the identity.
    std::vector<std::uint64_t> left(n, 0), right(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (m.entry(r, c)) left[r] |= std::uint64_t{1} << c;
        }
        right[r] = std::uint64_t{1} << r;
    }
    for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t mask = std::uint64_t{1} << c;
        std::size_t pivot = c;
        while (pivot < n && !(left[pivot] & mask)) ++pivot;
        if (pivot == n) throw Error(ErrorKind::SingularMap, "map is singular over GF(2)");
        std::swap(left[c], left[pivot]);
        std::swap(right[c], right[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && (left[r] & mask)) {
                left[r] ^= left[c];
                right[r] ^= right[c];
            }
        }
    }
    // right now holds the rows of M^{-1}; convert back to columns.
    std::vector<std::uint64_t> cols(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if ((right[r] >> c) & 1U) cols[c] |= std::uint64_t{1} << r;
        }
    }
    return GF2Map(n, std::move(cols));
}

GF2Map compose(const GF2Map& outer, const GF2Map& inner) {
    if (outer.dimension() != inner.dimension()) throw Error(ErrorKind::DimensionMismatch, "compose");
    std::vector<std::uint64_t> cols;
    for (std::size_t j = 0; j < inner.dimension(); ++j) cols.push_back(outer.apply(inner.column(j)));
    return GF2Map(inner.dimension(), std::move(cols));
}

Dynamics::Dynamics(GroundPtr ground, GF2Map map)
    : ground_(std::move(ground)), map_(std::move(map)), inverse_(gf2_inverse(map_)) {
    if (ground_->size() != map_.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "dynamics and ground set sizes differ");
    }
}

SubsetVector evolve(const SubsetVector& s, const Dynamics& dynamics) {
    if (s.ground().size() != dynamics.map().dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "state and dynamics sizes differ");
    }
    require_same_ground(s.ground_ptr(), dynamics.ground_ptr());
    return SubsetVector(s.ground_ptr(), dynamics.map().apply(s.bits()));
}

// ------------------------------------------------------------- StateMixture

StateMixture StateMixture::point(const SubsetVector& s) {
    StateMixture m;
    m.components_.push_back({s, Rational(1)});
    return m;
}

StateMixture StateMixture::from_components(std::vector<MixtureComponent> components) {
    if (components.empty()) throw Error(ErrorKind::InvalidProbability, "empty mixture");
    std::sort(components.begin(), components.end(),
              [](const MixtureComponent& a, const MixtureComponent& b) { return a.state.bits() < b.state.bits(); });
    StateMixture m;
    Rational total = 0;
    const GroundPtr ground = components.front().state.ground_ptr();
    for (auto& c : components) {
        require_same_ground(ground, c.state.ground_ptr());
        if (c.probability < 0) throw Error(ErrorKind::InvalidProbability, "negative mixture weight");
        total += c.probability;
        if (!m.components_.empty() && m.components_.back().state.bits() == c.state.bits()) {
            m.components_.back().probability += c.probability;
        } else {
            m.components_.push_back(std::move(c));
        }
    }
    if (total != 1) throw Error(ErrorKind::InvalidProbability, "mixture weights sum to " + to_string(total));
    std::erase_if(m.components_, [](const MixtureComponent& c) { return c.probability == 0; });
    return m;
}

Rational StateMixture::total() const {
    Rational t = 0;
    for (const auto& c : components_) t += c.probability;
    return t;
}

std::vector<Rational> StateMixture::singleton_distribution() const {
    std::vector<Rational> dist(ground_ptr()->size());
    for (const auto& c : components_) {
        if (c.state.count() != 1) {
            throw Error(ErrorKind::InvalidArgument, "component " + c.state.to_string() + " is not a singleton");
        }
        dist[c.state.members().front()] += c.probability;
    }
    return dist;
}

bool operator==(const StateMixture& a, const StateMixture& b) {
    if (a.components_.size() != b.components_.size()) return false;
    for (std::size_t i = 0; i < a.components_.size(); ++i) {
        if (!(a.components_[i].state == b.components_[i].state) ||
            a.components_[i].probability != b.components_[i].probability) {
            return false;
        }
    }
    return true;
}

namespace {

// Weight of index i inside a state, before normalisation.
Rational weight(std::size_t i, const std::optional<ProbGroundSet>& p) {
    return p ? p->p(i) : Rational(1);
}

std::vector<MixtureComponent> split(const SubsetVector& s, const Partition& by, const std::optional<ProbGroundSet>& p,
                                    const Rational& scale) {
    if (s.empty()) throw Error(ErrorKind::EmptyState, "cannot reduce the empty state");
    require_same_ground(s.ground_ptr(), by.ground_ptr());
    Rational mass = 0;
    for (std::size_t i : s.members()) mass += weight(i, p);
    std::vector<MixtureComponent> out;
    for (const auto& block : by.blocks()) {
        std::uint64_t part = 0;
        Rational part_mass = 0;
        for (std::size_t i : block) {
            if (s.contains(i)) {
                part |= std::uint64_t{1} << i;
                part_mass += weight(i, p);
            }
        }
        if (part != 0) out.push_back({SubsetVector(s.ground_ptr(), part), Rational(scale * part_mass / mass)});
    }
    return out;
}

}  // namespace

StateMixture reduce(const SubsetVector& s, const std::optional<ProbGroundSet>& p) {
    if (p) require_same_ground(s.ground_ptr(), p->ground_ptr());
    return StateMixture::from_components(split(s, Partition::discrete(s.ground_ptr()), p, Rational(1)));
}

StateMixture run_pipeline(const SubsetVector& initial, const std::vector<PipelineStep>& steps,
                          const std::optional<ProbGroundSet>& p) {
    if (p) require_same_ground(initial.ground_ptr(), p->ground_ptr());
    StateMixture state = StateMixture::point(initial);
    const Partition singletons = Partition::discrete(initial.ground_ptr());
    for (const auto& step : steps) {
        std::vector<MixtureComponent> next;
        for (const auto& c : state.components()) {
            if (const auto* e = std::get_if<EvolveStep>(&step)) {
                next.push_back({evolve(c.state, e->dynamics), c.probability});
            } else {
                const Partition& by = std::holds_alternative<MeasureStep>(step) ? std::get<MeasureStep>(step).by
                                                                                : singletons;
                auto parts = split(c.state, by, p, c.probability);
                next.insert(next.end(), parts.begin(), parts.end());
            }
        }
        state = StateMixture::from_components(std::move(next));
    }
    return state;
}

std::map<std::uint64_t, std::size_t> sample_pipeline(const SubsetVector& initial,
                                                      const std::vector<PipelineStep>& steps,
                                                      const std::optional<ProbGroundSet>& p, std::size_t trials,
                                                      std::uint64_t seed) {
    ChoiceSampler sampler(seed);
    std::map<std::uint64_t, std::size_t> counts;
    for (std::size_t t = 0; t < trials; ++t) {
        SubsetVector s = initial;
        for (const auto& step : steps) {
            if (const auto* e = std::get_if<EvolveStep>(&step)) {
                s = evolve(s, e->dynamics);
                continue;
            }
            if (s.empty()) throw Error(ErrorKind::EmptyState, "cannot reduce the empty state");
            const auto members = s.members();
            const std::size_t chosen = p ? sampler.draw(members, *p) : sampler.draw_uniform(members);
            if (const auto* m = std::get_if<MeasureStep>(&step)) {
                std::uint64_t part = 0;
                for (std::size_t i : m->by.blocks()[m->by.block_of(chosen)]) {
                    if (s.contains(i)) part |= std::uint64_t{1} << i;
                }
                s = SubsetVector(s.ground_ptr(), part);
            } else {
                s = SubsetVector::of(s.ground_ptr(), {chosen});
            }
        }
        ++counts[s.bits()];
    }
    return counts;
}

// -------------------------------------------------------------- double slit

DoubleSlitSetup double_slit_setup() {
    GroundPtr ground = make_ground({"a", "b", "c"});
    auto images = std::vector<SubsetVector>{
        SubsetVector::of_labels(ground, {"a", "b"}),
        SubsetVector::of_labels(ground, {"a", "b", "c"}),
        SubsetVector::of_labels(ground, {"b", "c"}),
    };
    return {ground, Dynamics(ground, GF2Map::from_images(images)), SubsetVector::of_labels(ground, {"a", "c"})};
}

std::vector<PipelineStep> double_slit_steps(int which_case, const DoubleSlitSetup& setup) {
    switch (which_case) {
        case 1: return {DetectStep{}, EvolveStep{setup.dynamics}, DetectStep{}};
        case 2: return {EvolveStep{setup.dynamics}, DetectStep{}};
        default: throw Error(ErrorKind::InvalidArgument, "double-slit case must be 1 or 2");
    }
}

std::vector<Rational> double_slit(int which_case) {
    const DoubleSlitSetup setup = double_slit_setup();
    return run_pipeline(setup.at_screen, double_slit_steps(which_case, setup)).singleton_distribution();
}

}  // namespace dits
