// Finite-dimensional unital counital bialgebras given by exact structure
// constants.
//
// Structure maps are stored as matrices in the canonical tensor basis:
//   mult    d x d^2   column i*d+j holds b_i b_j
//   unit    d x 1
//   comult  d^2 x d   column k holds Δ(b_k)
//   counit  1 x d
// which is the same data as the 3-tensors of the file format, laid out so that
// every identity becomes a composition of Kronecker products.

#ifndef HQG_HOPF_BIALGEBRA_HPP
#define HQG_HOPF_BIALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqg/errors.hpp"
#include "hqg/exact/sparse.hpp"
#include "hqg/loop/cayley.hpp"
#include "hqg/report.hpp"
#include "hqg/verify.hpp"

namespace hqg {

template <ExactField F>
using LinMap = SparseMatrix<F>;

template <ExactField F>
class Bialgebra {
   public:
    /// Throws DimensionMismatch on inconsistent shapes. The associativity and
    /// coassociativity flags are decided here.
    Bialgebra(Field<F> field, std::size_t dim, LinMap<F> mult, LinMap<F> unit, LinMap<F> comult, LinMap<F> counit,
              std::optional<LinMap<F>> antipode = std::nullopt, std::string name = {})
        : field_(std::move(field)),
          dim_(dim),
          mult_(std::move(mult)),
          unit_(std::move(unit)),
          comult_(std::move(comult)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)),
          name_(std::move(name)) {
        auto shape = [](const LinMap<F>& m, std::size_t r, std::size_t c, const char* what) {
            if (m.rows() != r || m.cols() != c)
                throw DimensionMismatch(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + ", expected " + std::to_string(r) + "x" +
                                        std::to_string(c));
        };
        if (dim_ == 0) throw DimensionMismatch("bialgebra of dimension 0");
        shape(mult_, dim_, dim_ * dim_, "mult");
        shape(unit_, dim_, 1, "unit");
        shape(comult_, dim_ * dim_, dim_, "comult");
        shape(counit_, 1, dim_, "counit");
        if (antipode_) shape(*antipode_, dim_, dim_, "antipode");
        const auto i = id();
        associative_ = mult_ * kron(mult_, i) == mult_ * kron(i, mult_);
        coassociative_ = kron(comult_, i) * comult_ == kron(i, comult_) * comult_;
    }

    const Field<F>& field() const { return field_; }
    F one() const { return field_.one(); }
    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }

    const LinMap<F>& mult() const { return mult_; }
    const LinMap<F>& unit() const { return unit_; }
    const LinMap<F>& comult() const { return comult_; }
    const LinMap<F>& counit() const { return counit_; }
    const std::optional<LinMap<F>>& antipode() const { return antipode_; }

    /// The stored antipode; throws PreconditionViolated when absent.
    const LinMap<F>& require_antipode() const {
        if (!antipode_) throw PreconditionViolated("bialgebra '" + name_ + "' carries no antipode");
        return *antipode_;
    }

    LinMap<F> id() const { return LinMap<F>::identity(dim_, field_.one()); }
    LinMap<F> id(std::size_t n) const { return LinMap<F>::identity(n, field_.one()); }

    /// Factor permutation on H^{⊗k}.
    LinMap<F> permute(std::initializer_list<std::size_t> order) const {
        const Dims dims(order.size(), dim_);
        const std::vector<std::size_t> ord(order);
        return permute_factors<F>(dims, ord, field_.one());
    }

    bool associative() const { return associative_; }
    bool coassociative() const { return coassociative_; }

    Bialgebra with_antipode(std::optional<LinMap<F>> s) const {
        Bialgebra b = *this;
        if (s && (s->rows() != dim_ || s->cols() != dim_)) throw DimensionMismatch("antipode shape");
        b.antipode_ = std::move(s);
        return b;
    }
    Bialgebra renamed(std::string name) const {
        Bialgebra b = *this;
        b.name_ = std::move(name);
        return b;
    }

    /// Same structure constants and antipode (the name is not compared).
    friend bool operator==(const Bialgebra& a, const Bialgebra& b) {
        return a.dim_ == b.dim_ && a.mult_ == b.mult_ && a.unit_ == b.unit_ && a.comult_ == b.comult_ &&
               a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
    }

   private:
    Field<F> field_;
    std::size_t dim_;
    LinMap<F> mult_, unit_, comult_, counit_;
    std::optional<LinMap<F>> antipode_;
    std::string name_;
    bool associative_ = false;
    bool coassociative_ = false;
};

template <ExactField F>
Dims tensor_dims(const Bialgebra<F>& b, std::size_t k) {
    return Dims(k, b.dim());
}

/// Monoid algebra of a table with identity, grouplike basis, no antipode.
template <ExactField F>
Bialgebra<F> loop_algebra_unchecked(const CayleyTable& t, const Field<F>& field) {
    const std::size_t d = t.order();
    const F one = field.one();
    std::vector<std::size_t> prod(d * d), diag(d);
    for (std::size_t i = 0; i < d; ++i) {
        diag[i] = i * d + i;
        for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = t(static_cast<Element>(i), static_cast<Element>(j));
    }
    const std::vector<std::size_t> zero{0};
    return Bialgebra<F>(field, d, LinMap<F>::from_basis_map(d, prod, one), LinMap<F>::from_basis_map(d, zero, one),
                        LinMap<F>::from_basis_map(d * d, diag, one),
                        LinMap<F>::from_basis_map(1, std::vector<std::size_t>(d, 0), one), std::nullopt, t.name());
}

/// Linear span of a loop: grouplike basis, product from the table, antipode
/// from the inverse map. Throws NotIPLoop.
template <ExactField F>
Bialgebra<F> loop_algebra(const CayleyTable& t, const Field<F>& field) {
    const auto q = check_quasigroup(t);
    if (!(q.latin && q.has_identity && q.ip)) throw NotIPLoop("loop algebra needs an IP loop table");
    const std::vector<std::size_t> inv(q.inverse->begin(), q.inverse->end());
    return loop_algebra_unchecked(t, field)
        .with_antipode(LinMap<F>::from_basis_map(t.order(), inv, field.one()))
        .renamed(t.name().empty() ? "k[loop]" : "k[" + t.name() + "]");
}

/// Structure constants transposed: the dual bialgebra on the dual basis.
template <ExactField F>
Bialgebra<F> dualize(const Bialgebra<F>& b) {
    std::optional<LinMap<F>> s;
    if (b.antipode()) s = b.antipode()->transpose();
    return Bialgebra<F>(b.field(), b.dim(), b.comult().transpose(), b.counit().transpose(), b.mult().transpose(),
                        b.unit().transpose(), std::move(s), b.name().empty() ? "dual" : b.name() + "*");
}

/// The monoid algebra of {1, z} with z z = z and grouplike z. Carries no
/// antipode and admits none.
template <ExactField F>
Bialgebra<F> idempotent_monoid(const Field<F>& field) {
    auto b = loop_algebra_unchecked(CayleyTable::from_rows({{0, 1}, {1, 1}}), field);
    return b.renamed("k{1,z}");
}

/// Sweedler's four-dimensional Hopf algebra on 1, g, x, gx with g^2 = 1,
/// x^2 = 0, xg = -gx, Δx = x⊗1 + g⊗x. The antipode has order 4.
template <ExactField F>
Bialgebra<F> sweedler(const Field<F>& field) {
    using Col = typename LinMap<F>::Column;
    const F one = field.one(), neg = -field.one();
    const std::size_t d = 4;
    enum : std::size_t { e = 0, g = 1, x = 2, gx = 3 };
    std::vector<Col> m(d * d);
    auto set = [&](std::size_t a, std::size_t b, std::size_t c, const F& s) { m[a * d + b].push_back({c, s}); };
    for (std::size_t b = 0; b < d; ++b) set(e, b, b, one);
    for (std::size_t b = 1; b < d; ++b) set(b, e, b, one);
    set(g, g, e, one);
    set(g, x, gx, one);
    set(g, gx, x, one);
    set(x, g, gx, neg);
    set(gx, g, x, neg);
    std::vector<Col> delta(d);
    delta[e] = {{e * d + e, one}};
    delta[g] = {{g * d + g, one}};
    delta[x] = {{x * d + e, one}, {g * d + x, one}};
    delta[gx] = {{gx * d + g, one}, {e * d + gx, one}};
    std::vector<Col> eps(d), unit(1), s(d);
    eps[e] = {{0, one}};
    eps[g] = {{0, one}};
    unit[0] = {{e, one}};
    s[e] = {{e, one}};
    s[g] = {{g, one}};
    s[x] = {{gx, neg}};
    s[gx] = {{x, one}};
    return Bialgebra<F>(field, d, LinMap<F>(d, std::move(m)), LinMap<F>(d, std::move(unit)), LinMap<F>(d * d, std::move(delta)),
                        LinMap<F>(1, std::move(eps)), LinMap<F>(d, std::move(s)), "Sweedler");
}

/// Unit, counit, multiplicativity of Δ and ε, (co)associativity.
template <ExactField F>
Report check_bialgebra(const Bialgebra<F>& b) {
    const auto& f = b.field();
    const auto i = b.id();
    const auto &m = b.mult(), &u = b.unit(), &d = b.comult(), &e = b.counit();
    const Dims one{1}, h1{b.dim()}, h2 = tensor_dims(b, 2), h3 = tensor_dims(b, 3);
    Report r("bialgebra");
    r.add(compare_maps("unit_left", m * kron(u, i), i, h1, h1, f));
    r.add(compare_maps("unit_right", m * kron(i, u), i, h1, h1, f));
    r.add(compare_maps("counit_left", kron(e, i) * d, i, h1, h1, f));
    r.add(compare_maps("counit_right", kron(i, e) * d, i, h1, h1, f));
    r.add(compare_maps("comult_multiplicative", d * m, kron(m, m) * b.permute({0, 2, 1, 3}) * kron(d, d), h2, h2, f));
    r.add(compare_maps("counit_multiplicative", e * m, kron(e, e), h2, one, f));
    r.add(compare_maps("comult_unital", d * u, kron(u, u), one, h2, f));
    r.add(compare_maps("counit_unital", e * u, LinMap<F>::identity(1, b.one()), one, one, f));
    r.add(compare_maps("associative", m * kron(m, i), m * kron(i, m), h3, h1, f));
    r.add(compare_maps("coassociative", kron(d, i) * d, kron(i, d) * d, h1, h3, f));
    r.note("dim", b.dim());
    return r;
}

/// (f*g) = m_a (f⊗g) Δ_c for f, g : C -> A.
template <ExactField F>
LinMap<F> convolve(const LinMap<F>& f, const LinMap<F>& g, const Bialgebra<F>& c, const Bialgebra<F>& a) {
    if (f.cols() != c.dim() || g.cols() != c.dim() || f.rows() != a.dim() || g.rows() != a.dim())
        throw DimensionMismatch("convolution factors must map the coalgebra into the algebra");
    return a.mult() * kron(f, g) * c.comult();
}

/// The convolution unit u∘ε.
template <ExactField F>
LinMap<F> convolution_unit(const Bialgebra<F>& c, const Bialgebra<F>& a) {
    if (c.field() != a.field()) throw FieldMismatch("convolution across fields");
    return a.unit() * c.counit();
}

}  // namespace hqg

#endif
