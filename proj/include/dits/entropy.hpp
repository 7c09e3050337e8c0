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
#include <string>
#include <vector>

#include "dits/partition.hpp"

namespace dits {

/// Tolerance used when comparing floating-point Shannon quantities.
inline constexpr double kShannonTolerance = 1e-12;

struct BlockProbability {
    std::size_t block = 0;
    Rational probability;
};

/// Pr(B_j) for each block, in canonical block order.
std::vector<BlockProbability> block_probs(const Partition& pi, const ProbGroundSet& p);

/// h(pi) = 1 - sum_j Pr(B_j)^2.
Rational logical_entropy(const Partition& pi, const ProbGroundSet& p);

/// h(pi) as the p x p measure of dit(pi): sum over distinctions (i, k) of p_i p_k.
Rational logical_entropy_ditsum(const Partition& pi, const ProbGroundSet& p);

/// p x p measure of an arbitrary pair relation.
Rational product_measure(const PairRelation& rel, const ProbGroundSet& p);

struct CompoundLogical {
    Rational joint;           // h(pi ∨ sigma)
    Rational pi_given_sigma;  // h(pi | sigma) = h(pi ∨ sigma) - h(sigma)
    Rational sigma_given_pi;  // h(sigma | pi) = h(pi ∨ sigma) - h(pi)
    Rational mutual;          // m(pi; sigma) = h(pi) + h(sigma) - h(pi ∨ sigma)
};

CompoundLogical compound_logical(const Partition& pi, const Partition& sigma, const ProbGroundSet& p);

/// H(pi) = sum_j Pr(B_j) log2(1 / Pr(B_j)), in bits.
double shannon_entropy(const Partition& pi, const ProbGroundSet& p);

struct CompoundShannon {
    double joint;
    double pi_given_sigma;
    double sigma_given_pi;
    double mutual;
};

CompoundShannon compound_shannon(const Partition& pi, const Partition& sigma, const ProbGroundSet& p);

/// Replaces each (1 - Pr(B_j)) in h(pi) = sum_j Pr(B_j)(1 - Pr(B_j)) by
/// log2(1 / Pr(B_j)) and checks that the result is H(pi).
bool dit_to_bit_check(const Partition& pi, const ProbGroundSet& p);

/// Tab separated table of h and H for every partition of p's ground set.
/// Columns: partition, blocks, h (exact), h (decimal), H (bits).
std::string entropy_table_tsv(const ProbGroundSet& p, std::size_t bound = kDefaultEnumerationBound);

}  // namespace dits
