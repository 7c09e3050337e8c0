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
#include <utility>
#include <vector>

#include "dits/linalg.hpp"
#include "dits/partition.hpp"

namespace dits {

/// Numerical attribute f : U -> Q.
class Attribute {
public:
    /// Throws Error(DimensionMismatch) unless there is one value per element.
    Attribute(GroundPtr ground, std::vector<Rational> values);

    const GroundSet& ground() const noexcept { return *ground_; }
    const GroundPtr& ground_ptr() const noexcept { return ground_; }
    const Rational& operator()(std::size_t i) const { return values_.at(i); }
    const std::vector<Rational>& values() const noexcept { return values_; }

    /// Distinct values in increasing order.
    std::vector<Rational> image() const;

private:
    GroundPtr ground_;
    std::vector<Rational> values_;
};

/// Blocks are the level sets f^{-1}(r).
Partition inverse_image_partition(const Attribute& f);

/// Checks f(u) = Σ_r r·χ_{f^{-1}(r)}(u) pointwise, and that the level-set
/// masks resolve unity: every subset is the disjoint union of its
/// intersections with the level sets.
bool set_spectral_check(const Attribute& f);

/// Direct-sum decomposition of Q^n given by bases of its subspaces.
class DSD {
public:
    /// Throws Error(DegenerateDSD) when a subspace is empty or has a dependent
    /// basis, when the subspaces fail to span Q^n with dimensions summing to
    /// n, or when two subspaces are not orthogonal.
    DSD(std::size_t ambient, std::vector<std::vector<Vector>> subspaces);

    /// One subspace per element, spanned by the standard basis vector.
    static DSD standard(std::size_t n);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t size() const noexcept { return subspaces_.size(); }
    const std::vector<std::vector<Vector>>& bases() const noexcept { return subspaces_; }
    Subspace subspace(std::size_t j) const { return Subspace(ambient_, subspaces_.at(j)); }

private:
    std::size_t ambient_;
    std::vector<std::vector<Vector>> subspaces_;
};

/// Symmetric rational matrix.
class Operator {
public:
    /// Throws Error(InvalidArgument) when the matrix is not symmetric.
    explicit Operator(Matrix m);

    std::size_t dimension() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }

    friend bool operator==(const Operator& a, const Operator& b) { return a.m_ == b.m_; }

private:
    Matrix m_;
};

/// Eigenvalues paired with the eigenspace decomposition they label.
struct SpectralData {
    std::vector<Rational> eigenvalues;
    DSD dsd;
};

/// F = Σ_j λ_j P_{V_j}. Throws DuplicateEigenvalue, or DimensionMismatch
/// when the counts differ.
Operator operator_from_dsd(const std::vector<Rational>& eigenvalues, const DSD& dsd);
Operator operator_from_dsd(const SpectralData& spectral);

/// Projections onto each subspace, computed exactly from Gram matrices.
std::vector<Matrix> projections(const DSD& dsd);

/// Spectral data of an attribute on the standard basis: one eigenspace per
/// level set, spanned by the standard vectors of its elements.
SpectralData attribute_spectrum(const Attribute& f);

/// Eigenvalue function of F on the standard basis: value at u_i is λ with
/// F e_i = λ e_i. Throws Error(InvalidArgument) if some e_i is not an
/// eigenvector.
Attribute eigenvalue_function(const Operator& f, GroundPtr ground);

/// FG - GF.
Matrix commutator(const Operator& f, const Operator& g);

/// Null space of m as a subspace.
Subspace kernel_space(const Matrix& m);

/// The non-zero intersections V_j ∩ W_j' of two decompositions.
std::vector<Subspace> intersection_family(const DSD& a, const DSD& b);

/// Span of the simultaneous eigenvectors: Σ_{j,j'} V_j ∩ W_j'.
Subspace simultaneous_eigenspace(const DSD& a, const DSD& b);

/// Builds both operators and checks span equality of the simultaneous
/// eigenspace with ker[F, G].
bool theorem_se_equals_kernel(const SpectralData& f, const SpectralData& g);

enum class Compatibility { Commuting, Incompatible, Conjugate };

const char* to_string(Compatibility c);

/// dim SE = n: commuting; 0 < dim SE < n: incompatible; dim SE = 0: conjugate.
Compatibility classify(const SpectralData& f, const SpectralData& g);

/// (f(u), g(u), ..., h(u)) for each element.
std::vector<std::vector<Rational>> value_tuples(const std::vector<Attribute>& attrs);

/// True iff the level-set partitions join to the discrete partition and the
/// value tuples are pairwise distinct. Throws GroundMismatch.
bool csca_complete(const std::vector<Attribute>& attrs);

/// True iff the iterated intersections of the decompositions are all
/// one-dimensional and span the space. Throws NotCommuting unless every pair
/// of decompositions commutes.
bool csco_complete(const std::vector<DSD>& dsds);

/// Cartesian product U x U' with labels "u:v", first factor most significant.
GroundPtr product_ground(const GroundSet& left, const GroundSet& right);

/// Blocks B x C for blocks B of pi and C of sigma.
Partition product_partition(const Partition& pi, const Partition& sigma);

/// Attribute on U x U' whose value at (u, v) is the rank of the pair
/// (f(u), g(v)) among all such pairs, so its level sets are those of the pair.
Attribute product_attribute(const Attribute& f, const Attribute& g);

}  // namespace dits
