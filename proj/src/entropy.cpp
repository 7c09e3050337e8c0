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

#include "dits/entropy.hpp"

#include <cmath>
#include <sstream>

#include "dits/notation.hpp"

namespace dits {

std::vector<BlockProbability> block_probs(const Partition& pi, const ProbGroundSet& p) {
    require_same_ground(pi.ground_ptr(), p.ground_ptr());
    std::vector<BlockProbability> out;
    out.reserve(pi.block_count());
    for (std::size_t b = 0; b < pi.block_count(); ++b) out.push_back({b, p.mass(pi.blocks()[b])});
    return out;
}

Rational logical_entropy(const Partition& pi, const ProbGroundSet& p) {
    Rational h = 1;
    for (const auto& bp : block_probs(pi, p)) h -= bp.probability * bp.probability;
    return h;
}

Rational product_measure(const PairRelation& rel, const ProbGroundSet& p) {
    require_same_ground(rel.ground_ptr(), p.ground_ptr());
    Rational total = 0;
    for (const auto& [i, k] : rel.pairs()) total += p.p(i) * p.p(k);
    return total;
}

Rational logical_entropy_ditsum(const Partition& pi, const ProbGroundSet& p) {
    require_same_ground(pi.ground_ptr(), p.ground_ptr());
    Rational total = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (std::size_t k = 0; k < pi.size(); ++k) {
            if (pi.is_dit(i, k)) total += p.p(i) * p.p(k);
        }
    }
    return total;
}

CompoundLogical compound_logical(const Partition& pi, const Partition& sigma, const ProbGroundSet& p) {
    const Rational h_pi = logical_entropy(pi, p);
    const Rational h_sigma = logical_entropy(sigma, p);
    const Rational h_join = logical_entropy(join(pi, sigma), p);
    return {h_join, Rational(h_join - h_sigma), Rational(h_join - h_pi), Rational(h_pi + h_sigma - h_join)};
}

double shannon_entropy(const Partition& pi, const ProbGroundSet& p) {
    double total = 0.0;
    for (const auto& bp : block_probs(pi, p)) {
        const double pr = bp.probability.get_d();
        total += pr * std::log2(1.0 / pr);
    }
    return total;
}

CompoundShannon compound_shannon(const Partition& pi, const Partition& sigma, const ProbGroundSet& p) {
    const double h_pi = shannon_entropy(pi, p);
    const double h_sigma = shannon_entropy(sigma, p);
    const double h_join = shannon_entropy(join(pi, sigma), p);
    return {h_join, h_join - h_sigma, h_join - h_pi, h_pi + h_sigma - h_join};
}

bool dit_to_bit_check(const Partition& pi, const ProbGroundSet& p) {
    Rational block_form = 0;
    double transformed = 0.0;
    for (const auto& bp : block_probs(pi, p)) {
        block_form += bp.probability * (1 - bp.probability);
        transformed += bp.probability.get_d() * std::log2(1.0 / bp.probability.get_d());
    }
    if (block_form != logical_entropy(pi, p)) return false;
    return std::abs(transformed - shannon_entropy(pi, p)) <= kShannonTolerance;
}

std::string entropy_table_tsv(const ProbGroundSet& p, std::size_t bound) {
    std::ostringstream out;
    out << "partition\tblocks\th\th_decimal\tH_bits\n";
    for (const Partition& pi : enumerate_partitions(p.ground_ptr(), bound)) {
        const Rational h = logical_entropy(pi, p);
        out << format_partition(pi) << '\t' << pi.block_count() << '\t' << to_string(h) << '\t'
            << to_decimal(h, 6) << '\t' << to_decimal(Rational(shannon_entropy(pi, p)), 6) << '\n';
    }
    return out.str();
}

}  // namespace dits
