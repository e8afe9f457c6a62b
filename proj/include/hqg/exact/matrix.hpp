// Dense exact matrices and the elimination routines everything else leans on:
// rank (fraction-free), inverse, linear solve and nullspace.

#ifndef HQG_EXACT_MATRIX_HPP
#define HQG_EXACT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqg/errors.hpp"
#include "hqg/exact/scalar.hpp"

namespace hqg {

template <ExactField F>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match shape");
    }

    static Matrix identity(std::size_t n, const F& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    /// Build from nested integer rows (test and fixture convenience).
    static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows, const Field<F>& field) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionMismatch("ragged row list");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = field.from_int(v);
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<F>& entries() const { return data_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = s * x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (!is_zero(bkj)) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero_matrix() const {
        return std::all_of(data_.begin(), data_.end(), [](const F& x) { return is_zero(x); });
    }

   private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Kronecker product; entry (i*rows(b)+k, j*cols(b)+l) = a(i,j) * b(k,l).
template <ExactField F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const F& aij = a(i, j);
            if (is_zero(aij)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!is_zero(b(k, l))) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

namespace detail {

/// Reduced row echelon form in place; returns pivot columns. Only the first
/// `limit` columns are eligible as pivots (the rest ride along, as in an
/// augmented system).
template <ExactField F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const F inv = reciprocal(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!is_zero(m(row, j))) nz.push_back(j);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const F factor = m(r, col);
            for (std::size_t j : nz) m(r, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
    // Fraction-free elimination: every intermediate entry is an integer minor.
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        const mpz_class& piv = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = piv * a[r][j] - a[r][col] * a[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][j] = std::move(t);
            }
            a[r][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Exact rank. Rational input is scaled row-wise to integers and reduced with
/// Bareiss elimination; other fields use plain Gaussian elimination.
template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, Rational>) {
        std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            mpz_class l = 1;
            for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
            for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        }
        return detail::bareiss_rank(std::move(a), m.cols());
    } else {
        Matrix<F> w = m;
        return detail::rref_in_place(w, w.cols()).size();
    }
}

/// Two-sided inverse; throws NotInvertible when the exact rank is deficient.
template <ExactField F>
Matrix<F> invert(const Matrix<F>& m, const F& one) {
    if (!m.square()) throw DimensionMismatch("invert requires a square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one;
    }
    const auto piv = detail::rref_in_place(aug, n);
    if (piv.size() != n)
        throw NotInvertible("matrix of size " + std::to_string(n) + " has rank " + std::to_string(piv.size()));
    Matrix<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

/// Some X with a * X = b, or nullopt when the system is inconsistent.
template <ExactField F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    const std::size_t n = a.cols();
    Matrix<F> aug(a.rows(), n + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    const auto piv = detail::rref_in_place(aug, n);
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        for (std::size_t j = n; j < aug.cols(); ++j)
            if (!is_zero(aug(i, j))) return std::nullopt;
    Matrix<F> x(n, b.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = aug(r, n + j);
    return x;
}

/// Basis of {x : a x = 0} as the columns of the result (free-variable order).
template <ExactField F>
Matrix<F> nullspace(const Matrix<F>& a, const F& one) {
    Matrix<F> w = a;
    const auto piv = detail::rref_in_place(w, w.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix<F> basis(a.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = one;
        for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -w(r, free[k]);
    }
    return basis;
}

}  // namespace hqg

#endif
