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

#include "dits/linalg.hpp"

#include <utility>

#include "dits/error.hpp"

namespace dits {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t height) {
    Matrix m(height, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != height) throw Error(ErrorKind::DimensionMismatch, "column has wrong length");
        for (std::size_t r = 0; r < height; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) return false;
    }
    return true;
}

bool Matrix::is_symmetric() const {
    return is_square() && *this == transpose();
}

bool Matrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != -(*this)(c, r)) return false;
        }
    }
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t x = 0; x < a.data_.size(); ++x) out.data_[x] = a.data_[x] + b.data_[x];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t x = 0; x < a.data_.size(); ++x) out.data_[x] = a.data_[x] - b.data_[x];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
        }
    }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
    }
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product");
    Rational total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
    return total;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
        }
        const Rational inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c) == 0) continue;
            const Rational factor = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(lead_row, j);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref(copy).size();
}

std::vector<Vector> kernel(const Matrix& m) {
    Matrix reduced = m;
    const auto pivots = rref(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    }
    return out;
}

// ------------------------------------------------------------------ Subspace

Subspace::Subspace(std::size_t ambient, const std::vector<Vector>& spanning) : ambient_(ambient) {
    if (spanning.empty()) return;
    for (const auto& v : spanning) {
        if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "vector outside the ambient space");
    }
    Matrix m = Matrix::from_rows(spanning);
    const std::size_t r = rref(m).size();
    for (std::size_t i = 0; i < r; ++i) basis_.push_back(m.row(i));
}

Subspace Subspace::zero(std::size_t ambient) {
    return Subspace(ambient, {});
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vector> unit;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector e(ambient);
        e[i] = 1;
        unit.push_back(std::move(e));
    }
    return Subspace(ambient, unit);
}

bool Subspace::contains(const Vector& v) const {
    std::vector<Vector> rows = basis_;
    rows.push_back(v);
    return rank(Matrix::from_rows(rows)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
    if (other.basis_.empty()) return true;
    std::vector<Vector> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return rank(Matrix::from_rows(rows)) == basis_.size();
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b) && b.contains(a);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
    const std::size_t n = a.ambient();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    // Solve A x = B y, i.e. [A | -B] (x, y) = 0, and map back through A.
    Matrix stacked(n, a.dim() + b.dim());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < a.dim(); ++j) stacked(r, j) = a.basis()[j][r];
        for (std::size_t j = 0; j < b.dim(); ++j) stacked(r, a.dim() + j) = -b.basis()[j][r];
    }
    std::vector<Vector> common;
    for (const auto& sol : kernel(stacked)) {
        Vector v(n);
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t r = 0; r < n; ++r) v[r] += sol[j] * a.basis()[j][r];
        }
        common.push_back(std::move(v));
    }
    return Subspace(n, common);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
    std::vector<Vector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace(a.ambient(), rows);
}

Matrix orthogonal_projection(const Subspace& s) {
    const std::size_t n = s.ambient();
    if (s.dim() == 0) return Matrix(n, n);
    const Matrix b = Matrix::from_columns(s.basis(), n);
    const Matrix bt = b.transpose();
    return b * inverse(bt * b) * bt;
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace dits
