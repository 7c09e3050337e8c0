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

#include "dits/rational.hpp"

namespace dits {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Throws Error(DimensionMismatch) on ragged rows.
    static Matrix from_rows(const std::vector<Vector>& rows);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t height);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational dot(const Vector& a, const Vector& b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0}, one vector per free column, free entry set to 1.
std::vector<Vector> kernel(const Matrix& m);

/// Throws Error(DimensionMismatch) if not square, Error(InvalidArgument) if singular.
Matrix inverse(const Matrix& m);

/// Subspace of Q^n given by a linearly independent basis.
class Subspace {
public:
    /// Reduces the spanning set to an independent basis (rows of its rref).
    Subspace(std::size_t ambient, const std::vector<Vector>& spanning);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Mutual containment, independent of the chosen bases.
    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Orthogonal projection onto span(basis): B (BᵀB)⁻¹ Bᵀ with B = [basis].
Matrix orthogonal_projection(const Subspace& s);

std::string to_string(const Vector& v);

}  // namespace dits
