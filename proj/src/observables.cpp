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

#include "dits/observables.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dits/error.hpp"

namespace dits {

// ---------------------------------------------------------------- Attribute

Attribute::Attribute(GroundPtr ground, std::vector<Rational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
    if (values_.size() != ground_->size()) {
        throw Error(ErrorKind::DimensionMismatch, "attribute needs one value per element");
    }
}

std::vector<Rational> Attribute::image() const {
    std::vector<Rational> out = values_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition inverse_image_partition(const Attribute& f) {
    const auto image = f.image();
    std::vector<std::size_t> ids(f.values().size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        ids[i] = static_cast<std::size_t>(std::lower_bound(image.begin(), image.end(), f(i)) - image.begin());
    }
    return Partition::from_block_ids(f.ground_ptr(), ids);
}

bool set_spectral_check(const Attribute& f) {
    const std::size_t n = f.values().size();
    const auto image = f.image();
    std::vector<std::vector<bool>> chi;
    for (const auto& r : image) {
        std::vector<bool> mask(n);
        for (std::size_t i = 0; i < n; ++i) mask[i] = f(i) == r;
        chi.push_back(std::move(mask));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational value = 0;
        for (std::size_t j = 0; j < image.size(); ++j) {
            if (chi[j][i]) value += image[j];
        }
        if (value != f(i)) return false;
    }
    if (n > 16) {
        // Exhaustive subsets are out of reach; pointwise disjoint covering is equivalent.
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t hits = 0;
            for (const auto& mask : chi) hits += mask[i] ? 1 : 0;
            if (hits != 1) return false;
        }
        return true;
    }
    for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
        std::uint32_t rebuilt = 0;
        for (const auto& mask : chi) {
            std::uint32_t part = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask[i] && ((subset >> i) & 1U)) part |= 1U << i;
            }
            if (rebuilt & part) return false;
            rebuilt |= part;
        }
        if (rebuilt != subset) return false;
    }
    return true;
}

// ---------------------------------------------------------------------- DSD

DSD::DSD(std::size_t ambient, std::vector<std::vector<Vector>> subspaces)
    : ambient_(ambient), subspaces_(std::move(subspaces)) {
    std::size_t total = 0;
    std::vector<Vector> all;
    for (std::size_t j = 0; j < subspaces_.size(); ++j) {
        const auto& basis = subspaces_[j];
        if (basis.empty()) throw Error(ErrorKind::DegenerateDSD, "subspace " + std::to_string(j) + " is empty");
        for (const auto& v : basis) {
            if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "basis vector of wrong length");
        }
        if (rank(Matrix::from_rows(basis)) != basis.size()) {
            throw Error(ErrorKind::DegenerateDSD, "subspace " + std::to_string(j) + " has a dependent basis");
        }
        total += basis.size();
        all.insert(all.end(), basis.begin(), basis.end());
    }
    if (total != ambient_ || rank(Matrix::from_rows(all)) != ambient_) {
        throw Error(ErrorKind::DegenerateDSD, "subspaces do not form a direct sum of Q^" + std::to_string(ambient_));
    }
    for (std::size_t a = 0; a < subspaces_.size(); ++a) {
        for (std::size_t b = a + 1; b < subspaces_.size(); ++b) {
            for (const auto& u : subspaces_[a]) {
                for (const auto& v : subspaces_[b]) {
                    if (dot(u, v) != 0) {
                        throw Error(ErrorKind::DegenerateDSD, "subspaces " + std::to_string(a) + " and " +
                                                                  std::to_string(b) + " are not orthogonal");
                    }
                }
            }
        }
    }
}

DSD DSD::standard(std::size_t n) {
    std::vector<std::vector<Vector>> subspaces;
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = 1;
        subspaces.push_back({std::move(e)});
    }
    return DSD(n, std::move(subspaces));
}

// ----------------------------------------------------------------- Operator

Operator::Operator(Matrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "operator matrix is not symmetric");
}

std::vector<Matrix> projections(const DSD& dsd) {
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < dsd.size(); ++j) out.push_back(orthogonal_projection(dsd.subspace(j)));
    return out;
}

Operator operator_from_dsd(const std::vector<Rational>& eigenvalues, const DSD& dsd) {
    if (eigenvalues.size() != dsd.size()) {
        throw Error(ErrorKind::DimensionMismatch, "need one eigenvalue per subspace");
    }
    std::set<Rational> seen;
    for (const auto& v : eigenvalues) {
        if (!seen.insert(v).second) throw Error(ErrorKind::DuplicateEigenvalue, "eigenvalue " + to_string(v));
    }
    const auto proj = projections(dsd);
    Matrix f(dsd.ambient(), dsd.ambient());
    for (std::size_t j = 0; j < proj.size(); ++j) f = f + eigenvalues[j] * proj[j];
    return Operator(std::move(f));
}

Operator operator_from_dsd(const SpectralData& spectral) {
    return operator_from_dsd(spectral.eigenvalues, spectral.dsd);
}

SpectralData attribute_spectrum(const Attribute& f) {
    const std::size_t n = f.values().size();
    const auto image = f.image();
    std::vector<std::vector<Vector>> subspaces(image.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::size_t>(std::lower_bound(image.begin(), image.end(), f(i)) - image.begin());
        Vector e(n);
        e[i] = 1;
        subspaces[j].push_back(std::move(e));
    }
    return {image, DSD(n, std::move(subspaces))};
}

Attribute eigenvalue_function(const Operator& f, GroundPtr ground) {
    const std::size_t n = f.dimension();
    if (ground->size() != n) throw Error(ErrorKind::DimensionMismatch, "ground set and operator sizes differ");
    std::vector<Rational> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            if (r != i && f.matrix()(r, i) != 0) {
                throw Error(ErrorKind::InvalidArgument, "e_" + std::to_string(i) + " is not an eigenvector");
            }
        }
        values[i] = f.matrix()(i, i);
    }
    return Attribute(std::move(ground), std::move(values));
}

Matrix commutator(const Operator& f, const Operator& g) {
    if (f.dimension() != g.dimension()) throw Error(ErrorKind::DimensionMismatch, "operators of different sizes");
    return f.matrix() * g.matrix() - g.matrix() * f.matrix();
}

Subspace kernel_space(const Matrix& m) {
    return Subspace(m.cols(), kernel(m));
}

std::vector<Subspace> intersection_family(const DSD& a, const DSD& b) {
    if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "decompositions of different spaces");
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Subspace v = a.subspace(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            Subspace w = intersect(v, b.subspace(j));
            if (w.dim() > 0) out.push_back(std::move(w));
        }
    }
    return out;
}

Subspace simultaneous_eigenspace(const DSD& a, const DSD& b) {
    Subspace total = Subspace::zero(a.ambient());
    for (const auto& s : intersection_family(a, b)) total = sum(total, s);
    return total;
}

bool theorem_se_equals_kernel(const SpectralData& f, const SpectralData& g) {
    const Operator fo = operator_from_dsd(f);
    const Operator go = operator_from_dsd(g);
    return simultaneous_eigenspace(f.dsd, g.dsd) == kernel_space(commutator(fo, go));
}

const char* to_string(Compatibility c) {
    switch (c) {
        case Compatibility::Commuting: return "Commuting";
        case Compatibility::Incompatible: return "Incompatible";
        case Compatibility::Conjugate: return "Conjugate";
    }
    return "?";
}

Compatibility classify(const SpectralData& f, const SpectralData& g) {
    // Build both operators so invalid spectral data is rejected here too.
    operator_from_dsd(f);
    operator_from_dsd(g);
    const std::size_t dim = simultaneous_eigenspace(f.dsd, g.dsd).dim();
    if (dim == f.dsd.ambient()) return Compatibility::Commuting;
    return dim == 0 ? Compatibility::Conjugate : Compatibility::Incompatible;
}

std::vector<std::vector<Rational>> value_tuples(const std::vector<Attribute>& attrs) {
    if (attrs.empty()) return {};
    const std::size_t n = attrs.front().values().size();
    std::vector<std::vector<Rational>> tuples(n);
    for (const auto& a : attrs) {
        require_same_ground(attrs.front().ground_ptr(), a.ground_ptr());
        for (std::size_t i = 0; i < n; ++i) tuples[i].push_back(a(i));
    }
    return tuples;
}

bool csca_complete(const std::vector<Attribute>& attrs) {
    if (attrs.empty()) throw Error(ErrorKind::InvalidArgument, "no attributes given");
    Partition joined = Partition::indiscrete(attrs.front().ground_ptr());
    for (const auto& a : attrs) joined = join(joined, inverse_image_partition(a));
    if (!joined.is_discrete()) return false;
    auto tuples = value_tuples(attrs);
    std::sort(tuples.begin(), tuples.end());
    return std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end();
}

namespace {

SpectralData with_index_eigenvalues(const DSD& dsd) {
    std::vector<Rational> ev;
    for (std::size_t j = 0; j < dsd.size(); ++j) ev.emplace_back(static_cast<long>(j));
    return {std::move(ev), dsd};
}

}  // namespace

bool csco_complete(const std::vector<DSD>& dsds) {
    if (dsds.empty()) throw Error(ErrorKind::InvalidArgument, "no decompositions given");
    const std::size_t n = dsds.front().ambient();
    for (std::size_t a = 0; a < dsds.size(); ++a) {
        if (dsds[a].ambient() != n) throw Error(ErrorKind::DimensionMismatch, "decompositions of different spaces");
        for (std::size_t b = a + 1; b < dsds.size(); ++b) {
            if (classify(with_index_eigenvalues(dsds[a]), with_index_eigenvalues(dsds[b])) !=
                Compatibility::Commuting) {
                throw Error(ErrorKind::NotCommuting, "decompositions " + std::to_string(a) + " and " +
                                                         std::to_string(b) + " do not commute");
            }
        }
    }
    std::vector<Subspace> family;
    for (std::size_t j = 0; j < dsds.front().size(); ++j) family.push_back(dsds.front().subspace(j));
    for (std::size_t d = 1; d < dsds.size(); ++d) {
        std::vector<Subspace> next;
        for (const auto& s : family) {
            for (std::size_t j = 0; j < dsds[d].size(); ++j) {
                Subspace w = intersect(s, dsds[d].subspace(j));
                if (w.dim() > 0) next.push_back(std::move(w));
            }
        }
        family = std::move(next);
    }
    Subspace span = Subspace::zero(n);
    for (const auto& s : family) {
        if (s.dim() != 1) return false;
        span = sum(span, s);
    }
    return span.dim() == n;
}

GroundPtr product_ground(const GroundSet& left, const GroundSet& right) {
    std::vector<std::string> labels;
    for (const auto& u : left.labels()) {
        for (const auto& v : right.labels()) labels.push_back(u + ":" + v);
    }
    return make_ground(std::move(labels));
}

Partition product_partition(const Partition& pi, const Partition& sigma) {
    GroundPtr ground = product_ground(pi.ground(), sigma.ground());
    const std::size_t m = sigma.size();
    std::vector<std::size_t> ids(pi.size() * m);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (std::size_t k = 0; k < m; ++k) ids[i * m + k] = pi.block_of(i) * sigma.block_count() + sigma.block_of(k);
    }
    return Partition::from_block_ids(std::move(ground), ids);
}

Attribute product_attribute(const Attribute& f, const Attribute& g) {
    GroundPtr ground = product_ground(f.ground(), g.ground());
    std::map<std::pair<Rational, Rational>, long> rank_of;
    for (const auto& x : f.values()) {
        for (const auto& y : g.values()) rank_of.emplace(std::make_pair(x, y), 0);
    }
    long next = 0;
    for (auto& [pair, r] : rank_of) r = next++;
    std::vector<Rational> values;
    for (const auto& x : f.values()) {
        for (const auto& y : g.values()) values.emplace_back(rank_of.at({x, y}));
    }
    return Attribute(std::move(ground), std::move(values));
}

}  // namespace dits
