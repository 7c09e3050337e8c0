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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dits/rational.hpp"

namespace dits {

/// Ordered, labelled universe U = {u_0, ..., u_{n-1}}.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// True when every label is exactly one character, so "a|bc" notation is unambiguous.
    bool single_char_labels() const noexcept;

    friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

GroundPtr make_ground(std::vector<std::string> labels);

/// Ground set {a, b, c, ...} of the first n lowercase letters (n <= 26), then
/// u26, u27, ... beyond that.
GroundPtr letter_ground(std::size_t n);

bool same_ground(const GroundPtr& a, const GroundPtr& b);

/// Throws Error(GroundMismatch) unless both grounds hold the same labels.
void require_same_ground(const GroundPtr& a, const GroundPtr& b);

/// A set partition in canonical form. Blocks are ordered by least element and
/// indices are ascending inside each block, so `==` is structural equality.
/// The restricted growth string `rgs()[i]` is the block number of element i.
class Partition {
public:
    /// Canonicalises an arbitrary block labelling (ids need not be contiguous).
    static Partition from_block_ids(GroundPtr ground, std::span<const std::size_t> ids);

    /// The top 1_U: every element alone.
    static Partition discrete(GroundPtr ground);
    /// The bottom 0_U: a single block.
    static Partition indiscrete(GroundPtr ground);

    const GroundSet& ground() const noexcept { return *ground_; }
    const GroundPtr& ground_ptr() const noexcept { return ground_; }
    std::size_t size() const noexcept { return rgs_.size(); }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    const std::vector<std::size_t>& rgs() const noexcept { return rgs_; }
    std::size_t block_of(std::size_t i) const { return rgs_.at(i); }

    bool same_block(std::size_t i, std::size_t k) const { return rgs_.at(i) == rgs_.at(k); }
    bool is_dit(std::size_t i, std::size_t k) const { return !same_block(i, k); }

    bool is_discrete() const noexcept { return blocks_.size() == rgs_.size(); }
    bool is_indiscrete() const noexcept { return blocks_.size() == 1; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.rgs_ == b.rgs_ && same_ground(a.ground_, b.ground_);
    }

private:
    Partition(GroundPtr ground, std::vector<std::size_t> rgs);

    GroundPtr ground_;
    std::vector<std::size_t> rgs_;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// Builds a partition from label blocks. Throws EmptyBlock, OverlappingBlocks,
/// NotExhaustive or UnknownLabel.
Partition make_partition(GroundPtr ground, const std::vector<std::vector<std::string>>& blocks);

/// Set of ordered pairs (i, k) on a ground set, stored as an n x n bit matrix.
class PairRelation {
public:
    explicit PairRelation(GroundPtr ground);

    const GroundPtr& ground_ptr() const noexcept { return ground_; }
    std::size_t ground_size() const noexcept { return n_; }

    bool contains(std::size_t i, std::size_t k) const { return bits_[i * n_ + k]; }
    void insert(std::size_t i, std::size_t k) { bits_[i * n_ + k] = true; }
    std::size_t size() const;
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool is_reflexive() const;
    bool is_irreflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    bool subset_of(const PairRelation& other) const;

    PairRelation united(const PairRelation& other) const;
    PairRelation intersected(const PairRelation& other) const;
    PairRelation complement() const;

    friend bool operator==(const PairRelation& a, const PairRelation& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    GroundPtr ground_;
    std::size_t n_;
    std::vector<bool> bits_;
};

/// dit(pi): ordered pairs in different blocks.
PairRelation ditset(const Partition& pi);
/// indit(pi): ordered pairs in the same block, the equivalence relation of pi.
PairRelation inditset(const Partition& pi);

/// sigma ≾ pi, i.e. dit(sigma) ⊆ dit(pi): every block of pi sits inside a block of sigma.
bool refines(const Partition& sigma, const Partition& pi);

/// Least upper bound: blocks are the non-empty intersections of blocks.
Partition join(const Partition& pi, const Partition& sigma);

/// Greatest lower bound: connected components of indit(pi) ∪ indit(sigma).
Partition meet(const Partition& pi, const Partition& sigma);

/// sigma ⇒ pi: each block of pi contained in some block of sigma is split into
/// singletons, the remaining blocks of pi are kept whole.
Partition implication(const Partition& sigma, const Partition& pi);

inline constexpr std::size_t kDefaultEnumerationBound = 10;

/// All partitions of a ground set in restricted-growth-string order, lazily.
class PartitionRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = Partition;

        iterator() = default;
        Partition operator*() const;
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return done_ == other.done_; }

    private:
        friend class PartitionRange;
        iterator(GroundPtr ground);

        GroundPtr ground_;
        std::vector<std::size_t> rgs_;
        std::vector<std::size_t> prefix_max_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(ground_); }
    iterator end() const { return iterator(); }

private:
    friend PartitionRange enumerate_partitions(GroundPtr, std::size_t);
    explicit PartitionRange(GroundPtr ground) : ground_(std::move(ground)) {}

    GroundPtr ground_;
};

/// Throws Error(BoundExceeded) when the ground set is larger than `bound`.
PartitionRange enumerate_partitions(GroundPtr ground, std::size_t bound = kDefaultEnumerationBound);

/// Materialised enumeration.
std::vector<Partition> all_partitions(GroundPtr ground, std::size_t bound = kDefaultEnumerationBound);

/// Bell number B(n) by the Bell triangle.
mpz_class bell_number(std::size_t n);

/// Ground set with exact point probabilities, all positive and summing to one.
class ProbGroundSet {
public:
    /// Throws Error(InvalidProbability) on a length mismatch, a non-positive
    /// entry, or a sum different from 1.
    ProbGroundSet(GroundPtr ground, std::vector<Rational> probs);

    static ProbGroundSet uniform(GroundPtr ground);

    const GroundSet& ground() const noexcept { return *ground_; }
    const GroundPtr& ground_ptr() const noexcept { return ground_; }
    std::size_t size() const noexcept { return probs_.size(); }
    const Rational& p(std::size_t i) const { return probs_.at(i); }
    const std::vector<Rational>& probs() const noexcept { return probs_; }

    /// Pr(S) for an index set S.
    Rational mass(std::span<const std::size_t> indices) const;

private:
    GroundPtr ground_;
    std::vector<Rational> probs_;
};

/// Seeded sampler for the choice function: draws i from a block with
/// probability p_i / Pr(block). The same seed gives the same draw sequence
/// on every platform (GMP Mersenne Twister, exact integer ranges).
class ChoiceSampler {
public:
    explicit ChoiceSampler(std::uint64_t seed);

    /// Throws Error(EmptyBlock) for an empty block.
    std::size_t draw(std::span<const std::size_t> block, const ProbGroundSet& p);
    /// Uniform over the block.
    std::size_t draw_uniform(std::span<const std::size_t> block);

private:
    gmp_randclass rng_;
};

/// One draw from a fresh sampler seeded with `seed`.
std::size_t choice_reduce(std::span<const std::size_t> block, const ProbGroundSet& p, std::uint64_t seed);

}  // namespace dits
