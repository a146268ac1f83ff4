/*
   Copyright 2026 The hopfore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HOPFORE_EXACTNUM_MATRIX_HPP
#define HOPFORE_EXACTNUM_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hopfore/exactnum/cyclotomic.hpp"

namespace hopfore {

/// Dense row-major matrix over Q(zeta_n).  Kernels skip zero entries, which
/// keeps the monomial and block-structured matrices of module actions cheap.
class Matrix {
   public:
    explicit Matrix(int order = 1, std::size_t rows = 0, std::size_t cols = 0)
        : order_(order), rows_(rows), cols_(cols), entries_(rows * cols, Cyclotomic(order)) {}

    static Matrix identity(int order, std::size_t n) {
        Matrix m(order, n, n);
        const Cyclotomic one(order, 1L);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    static Matrix scalar(std::size_t n, const Cyclotomic& c) {
        Matrix m(c.order(), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    /// Builds a matrix from row-major entries.
    static Matrix from_rows(int order, const std::vector<std::vector<Cyclotomic>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(order, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged row list");
            for (std::size_t j = 0; j < c; ++j) {
                if (rows[i][j].order() != order) throw Error(ErrorKind::OrderMismatch, "entry order differs from matrix");
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    int order() const noexcept { return order_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Cyclotomic> entries() const noexcept { return entries_; }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
    }

    Matrix transpose() const {
        Matrix t(order_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Cyclotomic trace() const {
        require_square("trace");
        Cyclotomic t(order_);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Columns [first, first + count).
    Matrix columns(std::size_t first, std::size_t count) const {
        if (first + count > cols_) throw Error(ErrorKind::ShapeMismatch, "column range out of bounds");
        Matrix out(order_, rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
        return out;
    }

    /// Rows selected by index, in the given order.
    Matrix select_rows(std::span<const std::size_t> which) const {
        Matrix out(order_, which.size(), cols_);
        for (std::size_t k = 0; k < which.size(); ++k)
            for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(which[k], j);
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "addition");
        for (std::size_t k = 0; k < entries_.size(); ++k)
            if (!o.entries_[k].is_zero()) entries_[k] += o.entries_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "subtraction");
        for (std::size_t k = 0; k < entries_.size(); ++k)
            if (!o.entries_[k].is_zero()) entries_[k] -= o.entries_[k];
        return *this;
    }

    /// this += c * o
    Matrix& add_scaled(const Cyclotomic& c, const Matrix& o) {
        require_same_shape(o, "addition");
        if (c.is_zero()) return *this;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            if (!o.entries_[k].is_zero()) entries_[k].add_product(c, o.entries_[k]);
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Cyclotomic& c, const Matrix& m) {
        Matrix out(m.order_, m.rows_, m.cols_);
        return out.add_scaled(c, m);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(ErrorKind::ShapeMismatch, "product of " + a.shape() + " and " + b.shape());
        if (a.order_ != b.order_) throw Error(ErrorKind::OrderMismatch, "matrix product across fields");
        Matrix out(a.order_, a.rows_, b.cols_);
        // Nonzero column indices per row of b, computed once.
        std::vector<std::vector<std::size_t>> nz(b.rows_);
        for (std::size_t k = 0; k < b.rows_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) nz[k].push_back(j);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Cyclotomic& f = a(i, k);
                if (f.is_zero()) continue;
                for (std::size_t j : nz[k]) out(i, j).add_product(f, b(k, j));
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.order_ == b.order_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

   private:
    void require_square(const char* what) const {
        if (!is_square()) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " needs a square matrix, got " + shape());
    }

    void require_same_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorKind::ShapeMismatch, std::string(what) + " of " + shape() + " and " + o.shape());
        if (order_ != o.order_) throw Error(ErrorKind::OrderMismatch, std::string(what) + " across fields");
    }

    int order_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Cyclotomic> entries_;
};

namespace linalg {

struct Echelon {
    Matrix reduced;                       ///< reduced row echelon form
    std::vector<std::size_t> pivot_cols;  ///< one per nonzero row, increasing
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero entry.
inline Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != row)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(p, j), m(row, j));
        if (!m(row, col).is_one()) {
            const Cyclotomic inv = m(row, col).inverse();
            for (std::size_t j = col; j < cols; ++j)
                if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        }
        support.clear();
        for (std::size_t j = col; j < cols; ++j)
            if (!m(row, j).is_zero()) support.push_back(j);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Cyclotomic f = m(r, col);
            for (std::size_t j : support) m(r, j).sub_product(f, m(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

/// Basis of {v : m v = 0} as columns.  Column k is the solution with free
/// variable k set to one and the other free variables zero.
inline Matrix kernel_basis(const Matrix& m) {
    const Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(m.order(), n, free_cols.size());
    const Cyclotomic one(m.order(), 1L);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = one;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) basis(e.pivot_cols[r], k) = -e.reduced(r, free_cols[k]);
    }
    return basis;
}

/// Basis of the column space as columns, in reduced column echelon form.
inline Matrix image_basis(const Matrix& m) {
    const Echelon e = rref(m.transpose());
    Matrix basis(m.order(), m.rows(), e.pivot_cols.size());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, k) = e.reduced(k, i);
    return basis;
}

/// One solution X of A X = B (free variables set to zero).
inline Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve: row counts differ");
    Matrix aug(a.order(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    const Echelon e = rref(std::move(aug));
    Matrix x(a.order(), a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        const std::size_t c = e.pivot_cols[r];
        if (c >= a.cols()) throw Error(ErrorKind::SingularSystem, "right-hand side is not in the column space");
        for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

inline Matrix mat_pow(const Matrix& m, unsigned long e) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "power of non-square matrix");
    Matrix result = Matrix::identity(m.order(), m.rows());
    Matrix base = m;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Kronecker product; the left factor indexes the major block.
inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order()) throw Error(ErrorKind::OrderMismatch, "Kronecker product across fields");
    Matrix out(a.order(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Cyclotomic& f = a(i, j);
            if (f.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
        }
    return out;
}

inline Cyclotomic trace(const Matrix& m) { return m.trace(); }

/// p(M) for coefficients listed lowest degree first (Horner).
inline Matrix evaluate_polynomial(std::span<const Cyclotomic> coeffs, const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "polynomial of non-square matrix");
    Matrix acc(m.order(), m.rows(), m.cols());
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += coeffs[k];
    }
    return acc;
}

/// Monic minimal polynomial, lowest degree first.  Powers of M are flattened
/// into vectors and added one at a time until the newest is a combination of
/// the earlier ones; the dependency gives the polynomial.
inline std::vector<Cyclotomic> min_poly(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "minimal polynomial of non-square matrix");
    const std::size_t n = m.rows();
    const int order = m.order();
    std::vector<Matrix> powers{Matrix::identity(order, n)};
    for (std::size_t d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * m);
        // Columns: vec(M^0) ... vec(M^(d-1)); right-hand side vec(M^d).
        Matrix a(order, n * n, d);
        Matrix b(order, n * n, 1);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < n * n; ++i) a(i, k) = powers[k].entries()[i];
        for (std::size_t i = 0; i < n * n; ++i) b(i, 0) = powers[d].entries()[i];
        try {
            Matrix x = solve(a, b);
            std::vector<Cyclotomic> poly;
            for (std::size_t k = 0; k < d; ++k) poly.push_back(-x(k, 0));
            poly.emplace_back(order, 1L);
            return poly;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularSystem) throw;
        }
    }
    if (n == 0) return {Cyclotomic(order, 1L)};
    throw Error(ErrorKind::InternalInconsistency, "no polynomial relation up to degree n");
}

}  // namespace linalg

/// A subspace of k^n held by a basis in reduced column echelon form: on the
/// pivot rows the basis is the identity, so the coordinates of a member are
/// just its entries on those rows.
class Subspace {
   public:
    Subspace() = default;

    /// Span of the given columns.
    explicit Subspace(const Matrix& spanning) : ambient_(spanning.rows()), order_(spanning.order()) {
        const linalg::Echelon e = linalg::rref(spanning.transpose());
        basis_ = Matrix(order_, ambient_, e.pivot_cols.size());
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
            for (std::size_t i = 0; i < ambient_; ++i) basis_(i, k) = e.reduced(k, i);
        pivots_ = e.pivot_cols;
    }

    static Subspace whole(int order, std::size_t n) { return Subspace(Matrix::identity(order, n)); }

    std::size_t dim() const noexcept { return pivots_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Coordinates (dim x k) of k column vectors assumed to lie in the subspace.
    Matrix coordinates(const Matrix& vectors) const { return vectors.select_rows(pivots_); }

    bool contains(const Matrix& vectors) const { return basis_ * coordinates(vectors) == vectors; }

    /// Matrix of op : this -> target in the two bases; op must map into target.
    Matrix restrict_to(const Matrix& op, const Subspace& target) const { return target.coordinates(op * basis_); }

   private:
    std::size_t ambient_ = 0;
    int order_ = 1;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hopfore

#endif
