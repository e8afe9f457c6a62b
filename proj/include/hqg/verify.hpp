// Identities as equalities of linear maps, and linear solves whose unknown is
// itself a linear map.

#ifndef HQG_VERIFY_HPP
#define HQG_VERIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hqg/exact/sparse.hpp"
#include "hqg/report.hpp"

namespace hqg {

using Dims = std::vector<std::size_t>;

template <ExactField F>
std::vector<Coordinate> coordinates(const typename SparseMatrix<F>::Column& column, const Dims& out_dims,
                                    const Field<F>& field) {
    std::vector<Coordinate> out;
    out.reserve(column.size());
    for (const auto& e : column) out.push_back({decode_index(e.row, out_dims), field.format(e.value)});
    return out;
}

/// Witness at column `col`: the input basis tuple and both images.
template <ExactField F>
Witness map_witness(const SparseMatrix<F>& lhs, const SparseMatrix<F>& rhs, std::size_t col, const Dims& in_dims,
                    const Dims& out_dims, const Field<F>& field) {
    Witness w;
    w.input = decode_index(col, in_dims);
    w.lhs = coordinates(lhs.column(col), out_dims, field);
    w.rhs = coordinates(rhs.column(col), out_dims, field);
    return w;
}

/// lhs == rhs as maps V_in -> V_out; on failure the witness is the first basis
/// tensor (in index order) whose images differ.
template <ExactField F>
Check compare_maps(std::string name, const SparseMatrix<F>& lhs, const SparseMatrix<F>& rhs, const Dims& in_dims,
                   const Dims& out_dims, const Field<F>& field) {
    const auto diff = first_difference(lhs, rhs);
    if (!diff) return Check{std::move(name), true, std::nullopt};
    return Check{std::move(name), false, map_witness(lhs, rhs, *diff, in_dims, out_dims, field)};
}

/// Matrix unit E_pq of the given shape.
template <ExactField F>
SparseMatrix<F> matrix_unit(std::size_t rows, std::size_t cols, std::size_t p, std::size_t q, const F& one) {
    std::vector<typename SparseMatrix<F>::Column> c(cols);
    c[q].push_back({p, one});
    return SparseMatrix<F>(rows, std::move(c));
}

/// Some X (rows x cols) with op(X)[k] = rhs[k] for every k, where op is linear
/// in X, or nullopt when none exists. Free coordinates of the solution are 0.
template <ExactField F, class Op>
std::optional<SparseMatrix<F>> solve_for_map(std::size_t rows, std::size_t cols, Op op,
                                             const std::vector<SparseMatrix<F>>& rhs, const Field<F>& field) {
    const std::size_t unknowns = rows * cols;
    std::vector<std::size_t> offset(rhs.size() + 1, 0);
    for (std::size_t k = 0; k < rhs.size(); ++k) offset[k + 1] = offset[k] + rhs[k].rows() * rhs[k].cols();

    // equation index -> (unknown, coefficient) list, unknowns increasing
    std::map<std::size_t, std::vector<std::pair<std::size_t, F>>> eqs;
    for (std::size_t u = 0; u < unknowns; ++u) {
        const auto images = op(matrix_unit<F>(rows, cols, u / cols, u % cols, field.one()));
        if (images.size() != rhs.size()) throw DimensionMismatch("operator arity differs from right-hand side");
        for (std::size_t k = 0; k < images.size(); ++k) {
            const auto& img = images[k];
            if (img.rows() != rhs[k].rows() || img.cols() != rhs[k].cols())
                throw DimensionMismatch("operator image shape differs from right-hand side");
            for (std::size_t j = 0; j < img.cols(); ++j)
                for (const auto& e : img.column(j)) eqs[offset[k] + j * img.rows() + e.row].emplace_back(u, e.value);
        }
    }
    std::map<std::size_t, F> target;
    for (std::size_t k = 0; k < rhs.size(); ++k)
        for (std::size_t j = 0; j < rhs[k].cols(); ++j)
            for (const auto& e : rhs[k].column(j)) target[offset[k] + j * rhs[k].rows() + e.row] = e.value;
    for (const auto& [key, value] : target) {
        (void)value;
        eqs.try_emplace(key);
    }

    // Many equations coincide for structured inputs; keep one of each.
    std::set<std::string> seen;
    std::vector<std::pair<const std::vector<std::pair<std::size_t, F>>*, F>> distinct;
    for (const auto& [key, row] : eqs) {
        const auto t = target.find(key);
        const F b = t == target.end() ? F{} : t->second;
        std::string sig = field.format(b);
        for (const auto& [u, c] : row) sig += ";" + std::to_string(u) + ":" + field.format(c);
        if (seen.insert(std::move(sig)).second) distinct.emplace_back(&row, b);
    }
    Matrix<F> a(distinct.size(), unknowns), bvec(distinct.size(), 1);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        for (const auto& [u, c] : *distinct[i].first) a(i, u) = c;
        bvec(i, 0) = distinct[i].second;
    }
    const auto x = solve(a, bvec);
    if (!x) return std::nullopt;
    std::vector<typename SparseMatrix<F>::Column> out(cols);
    for (std::size_t u = 0; u < unknowns; ++u)
        if (!is_zero((*x)(u, 0))) out[u % cols].push_back({u / cols, (*x)(u, 0)});
    return SparseMatrix<F>(rows, std::move(out));
}

/// Exact inverse of a square sparse map, or nullopt when singular.
template <ExactField F>
std::optional<SparseMatrix<F>> try_invert(const SparseMatrix<F>& m, const F& one) {
    try {
        return SparseMatrix<F>::from_dense(invert(m.to_dense(), one));
    } catch (const NotInvertible&) {
        return std::nullopt;
    }
}

}  // namespace hqg

#endif
