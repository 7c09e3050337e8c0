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

#include "dits/partition.hpp"

#include <algorithm>
#include <numeric>

#include "dits/error.hpp"

namespace dits {

// ---------------------------------------------------------------- GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorKind::InvalidArgument, "ground set must have at least one element");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw Error(ErrorKind::InvalidArgument, "empty element label");
        if (!index_.emplace(labels_[i], i).second) {
            throw Error(ErrorKind::DuplicateLabel, "label '" + labels_[i] + "' appears twice");
        }
    }
}

std::optional<std::size_t> GroundSet::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool GroundSet::single_char_labels() const noexcept {
    return std::all_of(labels_.begin(), labels_.end(), [](const std::string& s) { return s.size() == 1; });
}

GroundPtr make_ground(std::vector<std::string> labels) {
    return std::make_shared<const GroundSet>(std::move(labels));
}

GroundPtr letter_ground(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "u" + std::to_string(i));
    }
    return make_ground(std::move(labels));
}

bool same_ground(const GroundPtr& a, const GroundPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_ground(const GroundPtr& a, const GroundPtr& b) {
    if (!same_ground(a, b)) throw Error(ErrorKind::GroundMismatch, "operands live on different ground sets");
}

// ---------------------------------------------------------------- Partition

Partition::Partition(GroundPtr ground, std::vector<std::size_t> rgs)
    : ground_(std::move(ground)), rgs_(std::move(rgs)) {
    std::size_t count = rgs_.empty() ? 0 : *std::max_element(rgs_.begin(), rgs_.end()) + 1;
    blocks_.resize(count);
    for (std::size_t i = 0; i < rgs_.size(); ++i) blocks_[rgs_[i]].push_back(i);
}

Partition Partition::from_block_ids(GroundPtr ground, std::span<const std::size_t> ids) {
    if (!ground) throw Error(ErrorKind::InvalidArgument, "null ground set");
    if (ids.size() != ground->size()) {
        throw Error(ErrorKind::DimensionMismatch, "block id list length differs from ground set size");
    }
    std::unordered_map<std::size_t, std::size_t> renumber;
    std::vector<std::size_t> rgs(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto [it, fresh] = renumber.emplace(ids[i], renumber.size());
        rgs[i] = it->second;
    }
    return Partition(std::move(ground), std::move(rgs));
}

Partition Partition::discrete(GroundPtr ground) {
    std::vector<std::size_t> rgs(ground->size());
    std::iota(rgs.begin(), rgs.end(), std::size_t{0});
    return Partition(std::move(ground), std::move(rgs));
}

Partition Partition::indiscrete(GroundPtr ground) {
    std::vector<std::size_t> rgs(ground->size(), 0);
    return Partition(std::move(ground), std::move(rgs));
}

Partition make_partition(GroundPtr ground, const std::vector<std::vector<std::string>>& blocks) {
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> ids(ground->size(), kUnassigned);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw Error(ErrorKind::EmptyBlock, "block " + std::to_string(b) + " is empty");
        for (const auto& label : blocks[b]) {
            auto idx = ground->index_of(label);
            if (!idx) throw Error(ErrorKind::UnknownLabel, "'" + label + "' is not in the ground set");
            if (ids[*idx] != kUnassigned) {
                throw Error(ErrorKind::OverlappingBlocks, "'" + label + "' appears in more than one block");
            }
            ids[*idx] = b;
        }
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == kUnassigned) {
            throw Error(ErrorKind::NotExhaustive, "'" + ground->label(i) + "' is not covered by any block");
        }
    }
    return Partition::from_block_ids(std::move(ground), ids);
}

// ------------------------------------------------------------- PairRelation

PairRelation::PairRelation(GroundPtr ground)
    : ground_(std::move(ground)), n_(ground_->size()), bits_(n_ * n_, false) {}

std::size_t PairRelation::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::pair<std::size_t, std::size_t>> PairRelation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            if (contains(i, k)) out.emplace_back(i, k);
        }
    }
    return out;
}

bool PairRelation::is_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (!contains(i, i)) return false;
    }
    return true;
}

bool PairRelation::is_irreflexive() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (contains(i, i)) return false;
    }
    return true;
}

bool PairRelation::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = i + 1; k < n_; ++k) {
            if (contains(i, k) != contains(k, i)) return false;
        }
    }
    return true;
}

bool PairRelation::is_transitive() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (!contains(i, j)) continue;
            for (std::size_t k = 0; k < n_; ++k) {
                if (contains(j, k) && !contains(i, k)) return false;
            }
        }
    }
    return true;
}

bool PairRelation::subset_of(const PairRelation& other) const {
    require_same_ground(ground_, other.ground_);
    for (std::size_t x = 0; x < bits_.size(); ++x) {
        if (bits_[x] && !other.bits_[x]) return false;
    }
    return true;
}

PairRelation PairRelation::united(const PairRelation& other) const {
    require_same_ground(ground_, other.ground_);
    PairRelation out(ground_);
    for (std::size_t x = 0; x < bits_.size(); ++x) out.bits_[x] = bits_[x] || other.bits_[x];
    return out;
}

PairRelation PairRelation::intersected(const PairRelation& other) const {
    require_same_ground(ground_, other.ground_);
    PairRelation out(ground_);
    for (std::size_t x = 0; x < bits_.size(); ++x) out.bits_[x] = bits_[x] && other.bits_[x];
    return out;
}

PairRelation PairRelation::complement() const {
    PairRelation out(ground_);
    for (std::size_t x = 0; x < bits_.size(); ++x) out.bits_[x] = !bits_[x];
    return out;
}

PairRelation ditset(const Partition& pi) {
    PairRelation rel(pi.ground_ptr());
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (std::size_t k = 0; k < pi.size(); ++k) {
            if (pi.is_dit(i, k)) rel.insert(i, k);
        }
    }
    return rel;
}

PairRelation inditset(const Partition& pi) {
    PairRelation rel(pi.ground_ptr());
    for (const auto& block : pi.blocks()) {
        for (std::size_t i : block) {
            for (std::size_t k : block) rel.insert(i, k);
        }
    }
    return rel;
}

// ------------------------------------------------------- lattice operations

bool refines(const Partition& sigma, const Partition& pi) {
    require_same_ground(sigma.ground_ptr(), pi.ground_ptr());
    for (const auto& block : pi.blocks()) {
        const std::size_t home = sigma.block_of(block.front());
        for (std::size_t i : block) {
            if (sigma.block_of(i) != home) return false;
        }
    }
    return true;
}

Partition join(const Partition& pi, const Partition& sigma) {
    require_same_ground(pi.ground_ptr(), sigma.ground_ptr());
    const std::size_t stride = sigma.block_count();
    std::vector<std::size_t> ids(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) ids[i] = pi.block_of(i) * stride + sigma.block_of(i);
    return Partition::from_block_ids(pi.ground_ptr(), ids);
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Partition meet(const Partition& pi, const Partition& sigma) {
    require_same_ground(pi.ground_ptr(), sigma.ground_ptr());
    DisjointSets sets(pi.size());
    for (const Partition* part : {&pi, &sigma}) {
        for (const auto& block : part->blocks()) {
            for (std::size_t i : block) sets.unite(block.front(), i);
        }
    }
    std::vector<std::size_t> ids(pi.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = sets.find(i);
    return Partition::from_block_ids(pi.ground_ptr(), ids);
}

Partition implication(const Partition& sigma, const Partition& pi) {
    require_same_ground(sigma.ground_ptr(), pi.ground_ptr());
    // Ids below n are singletons, ids n + b keep pi's block b whole.
    const std::size_t n = pi.size();
    std::vector<std::size_t> ids(n);
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        const auto& block = pi.blocks()[b];
        const std::size_t home = sigma.block_of(block.front());
        const bool contained =
            std::all_of(block.begin(), block.end(), [&](std::size_t i) { return sigma.block_of(i) == home; });
        for (std::size_t i : block) ids[i] = contained ? i : n + b;
    }
    return Partition::from_block_ids(pi.ground_ptr(), ids);
}

// -------------------------------------------------------------- enumeration

PartitionRange::iterator::iterator(GroundPtr ground)
    : ground_(std::move(ground)), rgs_(ground_->size(), 0), prefix_max_(ground_->size(), 0), done_(false) {}

Partition PartitionRange::iterator::operator*() const {
    return Partition::from_block_ids(ground_, rgs_);
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    // Rightmost position that may still grow: rgs[i] <= max(rgs[0..i-1]).
    const std::size_t n = rgs_.size();
    for (std::size_t i = n; i-- > 1;) {
        if (rgs_[i] <= prefix_max_[i - 1]) {
            ++rgs_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                rgs_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return *this;
        }
    }
    done_ = true;
    return *this;
}

PartitionRange enumerate_partitions(GroundPtr ground, std::size_t bound) {
    if (ground->size() > bound) {
        throw Error(ErrorKind::BoundExceeded, "ground set of size " + std::to_string(ground->size()) +
                                                  " exceeds enumeration bound " + std::to_string(bound));
    }
    return PartitionRange(std::move(ground));
}

std::vector<Partition> all_partitions(GroundPtr ground, std::size_t bound) {
    std::vector<Partition> out;
    for (Partition p : enumerate_partitions(std::move(ground), bound)) out.push_back(std::move(p));
    return out;
}

mpz_class bell_number(std::size_t n) {
    std::vector<mpz_class> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpz_class> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

// ------------------------------------------------------------ probabilities

ProbGroundSet::ProbGroundSet(GroundPtr ground, std::vector<Rational> probs)
    : ground_(std::move(ground)), probs_(std::move(probs)) {
    if (probs_.size() != ground_->size()) {
        throw Error(ErrorKind::InvalidProbability, "expected " + std::to_string(ground_->size()) +
                                                       " probabilities, got " + std::to_string(probs_.size()));
    }
    Rational total = 0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (probs_[i] <= 0) {
            throw Error(ErrorKind::InvalidProbability,
                        "p(" + ground_->label(i) + ") = " + to_string(probs_[i]) + " is not positive");
        }
        total += probs_[i];
    }
    if (total != 1) throw Error(ErrorKind::InvalidProbability, "probabilities sum to " + to_string(total));
}

ProbGroundSet ProbGroundSet::uniform(GroundPtr ground) {
    const std::size_t n = ground->size();
    std::vector<Rational> probs(n, Rational(1, static_cast<unsigned long>(n)));
    return ProbGroundSet(std::move(ground), std::move(probs));
}

Rational ProbGroundSet::mass(std::span<const std::size_t> indices) const {
    Rational total = 0;
    for (std::size_t i : indices) total += probs_.at(i);
    return total;
}

ChoiceSampler::ChoiceSampler(std::uint64_t seed) : rng_(gmp_randinit_mt) {
    rng_.seed(mpz_class(std::to_string(seed)));
}

std::size_t ChoiceSampler::draw(std::span<const std::size_t> block, const ProbGroundSet& p) {
    if (block.empty()) throw Error(ErrorKind::EmptyBlock, "cannot choose from an empty block");
    if (block.size() == 1) return block.front();
    // Scale the weights to integers over a common denominator and draw exactly.
    mpz_class common = 1;
    for (std::size_t i : block) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.p(i).get_den().get_mpz_t());
    std::vector<mpz_class> weights;
    mpz_class total = 0;
    for (std::size_t i : block) {
        weights.push_back(p.p(i).get_num() * (common / p.p(i).get_den()));
        total += weights.back();
    }
    mpz_class ticket = rng_.get_z_range(total);
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (ticket < weights[j]) return block[j];
        ticket -= weights[j];
    }
    return block.back();
}

std::size_t ChoiceSampler::draw_uniform(std::span<const std::size_t> block) {
    if (block.empty()) throw Error(ErrorKind::EmptyBlock, "cannot choose from an empty block");
    if (block.size() == 1) return block.front();
    mpz_class ticket = rng_.get_z_range(mpz_class(static_cast<unsigned long>(block.size())));
    return block[ticket.get_ui()];
}

std::size_t choice_reduce(std::span<const std::size_t> block, const ProbGroundSet& p, std::uint64_t seed) {
    ChoiceSampler sampler(seed);
    return sampler.draw(block, p);
}

}  // namespace dits
