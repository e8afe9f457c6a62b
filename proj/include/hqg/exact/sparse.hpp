// Column-compressed exact matrices for structure maps on tensor powers.
//
// Every identity in the library is ultimately an equality of two linear maps
// V_1 ⊗ ... ⊗ V_k -> W. On tensor cubes of a 12-dimensional algebra the dense
// form of those maps runs to tens of millions of entries while the number of
// nonzeros stays in the thousands, so composition happens here. Columns are
// kept sorted by row with explicit zeros removed, which makes equality a plain
// structural comparison.

#ifndef HQG_EXACT_SPARSE_HPP
#define HQG_EXACT_SPARSE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hqg/errors.hpp"
#include "hqg/exact/matrix.hpp"
#include "hqg/parallel.hpp"

namespace hqg {

template <ExactField F>
struct SparseEntry {
    std::size_t row;
    F value;
    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

template <ExactField F>
class SparseMatrix {
   public:
    using Column = std::vector<SparseEntry<F>>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    /// Takes ownership of the columns; normalizes each (sort, merge, drop zeros).
    SparseMatrix(std::size_t rows, std::vector<Column> columns)
        : rows_(rows), cols_(columns.size()), columns_(std::move(columns)) {
        for (auto& c : columns_) normalize(c);
    }

    static SparseMatrix identity(std::size_t n, const F& one) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, one});
        return m;
    }

    static SparseMatrix from_dense(const Matrix<F>& d) {
        SparseMatrix m(d.rows(), d.cols());
        for (std::size_t j = 0; j < d.cols(); ++j)
            for (std::size_t i = 0; i < d.rows(); ++i)
                if (!is_zero(d(i, j))) m.columns_[j].push_back({i, d(i, j)});
        return m;
    }

    /// The matrix whose column j is e_{image[j]} (a map sending basis to basis).
    static SparseMatrix from_basis_map(std::size_t rows, std::span<const std::size_t> image, const F& one) {
        SparseMatrix m(rows, image.size());
        for (std::size_t j = 0; j < image.size(); ++j) {
            if (image[j] >= rows) throw IndexOutOfRange("basis image outside target");
            m.columns_[j].push_back({image[j], one});
        }
        return m;
    }

    Matrix<F> to_dense() const {
        Matrix<F> d(rows_, cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& e : columns_[j]) d(e.row, j) = e.value;
        return d;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Column& column(std::size_t j) const { return columns_[j]; }
    std::size_t nonzeros() const {
        return std::accumulate(columns_.begin(), columns_.end(), std::size_t{0},
                               [](std::size_t s, const Column& c) { return s + c.size(); });
    }

    F at(std::size_t i, std::size_t j) const {
        const auto& c = columns_[j];
        auto it = std::lower_bound(c.begin(), c.end(), i, [](const SparseEntry<F>& e, std::size_t r) { return e.row < r; });
        return (it != c.end() && it->row == i) ? it->value : F{};
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
    }

    /// Composition a ∘ b (the matrix product a * b).
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("sparse product shape mismatch");
        SparseMatrix r(a.rows_, b.cols_);
        parallel_for(b.cols_, 2048, [&](std::size_t begin, std::size_t end) {
            std::vector<F> acc(a.rows_);
            std::vector<char> touched(a.rows_, 0);
            std::vector<std::size_t> rows_hit;
            for (std::size_t j = begin; j < end; ++j) {
                rows_hit.clear();
                for (const auto& be : b.columns_[j])
                    for (const auto& ae : a.columns_[be.row]) {
                        if (!touched[ae.row]) {
                            touched[ae.row] = 1;
                            rows_hit.push_back(ae.row);
                            acc[ae.row] = ae.value * be.value;
                        } else {
                            acc[ae.row] += ae.value * be.value;
                        }
                    }
                std::sort(rows_hit.begin(), rows_hit.end());
                auto& out = r.columns_[j];
                for (auto i : rows_hit) {
                    if (!is_zero(acc[i])) out.push_back({i, acc[i]});
                    touched[i] = 0;
                }
            }
        });
        return r;
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

    friend SparseMatrix operator*(const F& s, const SparseMatrix& a) {
        SparseMatrix r(a.rows_, a.cols_);
        if (is_zero(s)) return r;
        for (std::size_t j = 0; j < a.cols_; ++j)
            for (const auto& e : a.columns_[j]) r.columns_[j].push_back({e.row, s * e.value});
        return r;
    }

    SparseMatrix transpose() const {
        SparseMatrix r(cols_, rows_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& e : columns_[j]) r.columns_[e.row].push_back({j, e.value});
        return r;
    }

    /// Returns a copy with one entry replaced (used to manufacture negatives).
    SparseMatrix with_entry(std::size_t i, std::size_t j, const F& value) const {
        if (i >= rows_ || j >= cols_) throw IndexOutOfRange("entry outside matrix");
        SparseMatrix r = *this;
        auto& c = r.columns_[j];
        std::erase_if(c, [&](const SparseEntry<F>& e) { return e.row == i; });
        c.push_back({i, value});
        normalize(c);
        return r;
    }

   private:
    static void normalize(Column& c) {
        std::sort(c.begin(), c.end(), [](const SparseEntry<F>& x, const SparseEntry<F>& y) { return x.row < y.row; });
        Column out;
        out.reserve(c.size());
        for (auto& e : c) {
            if (!out.empty() && out.back().row == e.row)
                out.back().value += e.value;
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [](const SparseEntry<F>& e) { return is_zero(e.value); });
        c = std::move(out);
    }

    static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("sparse shapes differ");
        SparseMatrix r(a.rows_, a.cols_);
        for (std::size_t j = 0; j < a.cols_; ++j) {
            Column c = a.columns_[j];
            for (const auto& e : b.columns_[j]) c.push_back({e.row, subtract ? -e.value : e.value});
            normalize(c);
            r.columns_[j] = std::move(c);
        }
        return r;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Column> columns_;
};

template <ExactField F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    std::vector<typename SparseMatrix<F>::Column> cols(a.cols() * b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l) {
            auto& out = cols[j * b.cols() + l];
            out.reserve(a.column(j).size() * b.column(l).size());
            for (const auto& ae : a.column(j))
                for (const auto& be : b.column(l)) out.push_back({ae.row * b.rows() + be.row, ae.value * be.value});
        }
    return SparseMatrix<F>(a.rows() * b.rows(), std::move(cols));
}

/// Kronecker product of three or more factors, left to right.
template <ExactField F, class... Rest>
    requires(sizeof...(Rest) > 0)
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const Rest&... rest) {
    return kron(kron(a, b), rest...);
}

/// Left-to-right Kronecker product of several factors.
template <ExactField F>
SparseMatrix<F> kron(std::initializer_list<std::reference_wrapper<const SparseMatrix<F>>> factors) {
    auto it = factors.begin();
    SparseMatrix<F> r = *it++;
    for (; it != factors.end(); ++it) r = kron(r, it->get());
    return r;
}

/// Left-to-right composition chain: compose({f, g, h}) = f ∘ g ∘ h.
template <ExactField F>
SparseMatrix<F> compose(std::initializer_list<std::reference_wrapper<const SparseMatrix<F>>> maps) {
    auto it = std::rbegin(maps);
    SparseMatrix<F> r = *it++;
    for (; it != std::rend(maps); ++it) r = it->get() * r;
    return r;
}

/// Flat index -> tuple of factor coordinates (left factor major).
inline std::vector<std::size_t> decode_index(std::size_t flat, std::span<const std::size_t> dims) {
    std::vector<std::size_t> t(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        t[k] = flat % dims[k];
        flat /= dims[k];
    }
    return t;
}

inline std::size_t encode_index(std::span<const std::size_t> coords, std::span<const std::size_t> dims) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + coords[k];
    return flat;
}

/// Factor permutation V_0 ⊗ ... ⊗ V_{k-1} -> V_{order[0]} ⊗ ... ⊗ V_{order[k-1]}.
template <ExactField F>
SparseMatrix<F> permute_factors(std::span<const std::size_t> dims, std::span<const std::size_t> order, const F& one) {
    if (dims.size() != order.size()) throw DimensionMismatch("permutation arity mismatch");
    std::vector<std::size_t> out_dims(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) out_dims[t] = dims[order[t]];
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    std::vector<std::size_t> image(total);
    std::vector<std::size_t> out(order.size());
    for (std::size_t flat = 0; flat < total; ++flat) {
        const auto in = decode_index(flat, dims);
        for (std::size_t t = 0; t < order.size(); ++t) out[t] = in[order[t]];
        image[flat] = encode_index(out, out_dims);
    }
    return SparseMatrix<F>::from_basis_map(total, image, one);
}

template <ExactField F>
SparseMatrix<F> permute_factors(std::initializer_list<std::size_t> dims, std::initializer_list<std::size_t> order,
                                const F& one) {
    return permute_factors<F>(std::span<const std::size_t>(dims.begin(), dims.size()),
                              std::span<const std::size_t>(order.begin(), order.size()), one);
}

/// (a ⊗ b) · x without forming a ⊗ b.
template <ExactField F>
SparseMatrix<F> kron_apply(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const SparseMatrix<F>& x) {
    if (x.rows() != a.cols() * b.cols()) throw DimensionMismatch("kron_apply shape mismatch");
    const std::size_t rows = a.rows() * b.rows();
    std::vector<typename SparseMatrix<F>::Column> cols(x.cols());
    parallel_for(x.cols(), 2048, [&](std::size_t begin, std::size_t end) {
        std::vector<F> acc(rows);
        std::vector<char> touched(rows, 0);
        std::vector<std::size_t> rows_hit;
        for (std::size_t j = begin; j < end; ++j) {
            rows_hit.clear();
            for (const auto& xe : x.column(j)) {
                const std::size_t i = xe.row / b.cols(), l = xe.row % b.cols();
                for (const auto& ae : a.column(i)) {
                    const F av = ae.value * xe.value;
                    for (const auto& be : b.column(l)) {
                        const std::size_t r = ae.row * b.rows() + be.row;
                        if (!touched[r]) {
                            touched[r] = 1;
                            rows_hit.push_back(r);
                            acc[r] = av * be.value;
                        } else {
                            acc[r] += av * be.value;
                        }
                    }
                }
            }
            std::sort(rows_hit.begin(), rows_hit.end());
            auto& out = cols[j];
            for (auto r : rows_hit) {
                if (!is_zero(acc[r])) out.push_back({r, acc[r]});
                touched[r] = 0;
            }
        }
    });
    return SparseMatrix<F>(rows, std::move(cols));
}

/// permute_factors(dims, order) · x without forming the permutation matrix.
template <ExactField F>
SparseMatrix<F> permute_rows(std::span<const std::size_t> dims, std::span<const std::size_t> order, const SparseMatrix<F>& x) {
    if (dims.size() != order.size()) throw DimensionMismatch("permutation arity mismatch");
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    if (x.rows() != total) throw DimensionMismatch("permute_rows shape mismatch");
    std::vector<std::size_t> out_dims(order.size()), out(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) out_dims[t] = dims[order[t]];
    std::vector<typename SparseMatrix<F>::Column> cols(x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) {
        auto& c = cols[j];
        for (const auto& e : x.column(j)) {
            const auto in = decode_index(e.row, dims);
            for (std::size_t t = 0; t < order.size(); ++t) out[t] = in[order[t]];
            c.push_back({encode_index(out, out_dims), e.value});
        }
    }
    return SparseMatrix<F>(total, std::move(cols));
}

template <ExactField F>
SparseMatrix<F> permute_rows(std::initializer_list<std::size_t> dims, std::initializer_list<std::size_t> order,
                             const SparseMatrix<F>& x) {
    return permute_rows<F>(std::span<const std::size_t>(dims.begin(), dims.size()),
                           std::span<const std::size_t>(order.begin(), order.size()), x);
}

/// First column (in index order) where two equally-shaped maps differ.
template <ExactField F>
std::optional<std::size_t> first_difference(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("compared maps differ in shape");
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!(a.column(j) == b.column(j))) return j;
    return std::nullopt;
}

}  // namespace hqg

#endif
