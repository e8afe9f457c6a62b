// Hopf-quasigroup automorphisms and the group G² of automorphism pairs with
// product (α,β)∗(γ,δ) = (αγ, δγ⁻¹βγ).

#ifndef HQG_YDQ_AUTOMORPHISM_HPP
#define HQG_YDQ_AUTOMORPHISM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "hqg/hopf/bialgebra.hpp"
#include "hqg/loop/cayley.hpp"

namespace hqg {

template <ExactField F>
using BasePtr = std::shared_ptr<const Bialgebra<F>>;

template <ExactField F>
bool same_base(const BasePtr<F>& a, const BasePtr<F>& b) {
    return a == b || (a && b && *a == *b);
}

template <ExactField F>
void require_same_base(const BasePtr<F>& a, const BasePtr<F>& b, const char* what) {
    if (!same_base(a, b)) throw BaseMismatch(std::string(what) + ": operands live over different bialgebras");
}

/// S⁻¹ as an exact matrix inverse. Throws PreconditionViolated when the
/// antipode is missing or singular.
template <ExactField F>
LinMap<F> antipode_inverse(const Bialgebra<F>& b) {
    const auto inv = try_invert(b.require_antipode(), b.one());
    if (!inv) throw PreconditionViolated("antipode of '" + b.name() + "' is not bijective");
    return *inv;
}

template <ExactField F>
class HqgAutomorphism;
template <ExactField F>
struct AutomorphismCheck;
template <ExactField F>
AutomorphismCheck<F> check_automorphism(BasePtr<F> base, const LinMap<F>& m);

/// Invariant: matrix is an algebra and coalgebra automorphism of *base
/// commuting with the antipode, and inverse·matrix = I.
template <ExactField F>
class HqgAutomorphism {
   public:
    const BasePtr<F>& base() const { return base_; }
    const LinMap<F>& matrix() const { return matrix_; }
    const LinMap<F>& inverse() const { return inverse_; }

    static HqgAutomorphism identity(BasePtr<F> base) {
        auto i = base->id();
        return HqgAutomorphism(std::move(base), i, i);
    }

    /// this ∘ other. Composites of automorphisms are automorphisms, so no
    /// re-validation happens.
    HqgAutomorphism then_after(const HqgAutomorphism& other) const {
        require_same_base(base_, other.base_, "automorphism composition");
        return HqgAutomorphism(base_, matrix_ * other.matrix_, other.inverse_ * inverse_);
    }
    HqgAutomorphism inverted() const { return HqgAutomorphism(base_, inverse_, matrix_); }

    friend bool operator==(const HqgAutomorphism& a, const HqgAutomorphism& b) {
        return same_base(a.base_, b.base_) && a.matrix_ == b.matrix_;
    }

    friend AutomorphismCheck<F> check_automorphism<F>(BasePtr<F> base, const LinMap<F>& m);

   private:
    HqgAutomorphism(BasePtr<F> base, LinMap<F> m, LinMap<F> inv)
        : base_(std::move(base)), matrix_(std::move(m)), inverse_(std::move(inv)) {}

    BasePtr<F> base_;
    LinMap<F> matrix_;
    LinMap<F> inverse_;
};

template <ExactField F>
struct AutomorphismCheck {
    Report report;
    std::optional<HqgAutomorphism<F>> automorphism;  // present iff every axiom holds
};

/// Checks invertibility, the algebra and coalgebra morphism axioms and S∘α =
/// α∘S. Throws PreconditionViolated when the base has no antipode and
/// DimensionMismatch on a wrongly shaped matrix.
template <ExactField F>
AutomorphismCheck<F> check_automorphism(BasePtr<F> base, const LinMap<F>& m) {
    const auto& b = *base;
    const auto& s = b.require_antipode();
    if (m.rows() != b.dim() || m.cols() != b.dim()) throw DimensionMismatch("automorphism candidate shape");
    const auto& f = b.field();
    const Dims h1{b.dim()}, h2 = tensor_dims(b, 2), unit_dims{1};
    AutomorphismCheck<F> out;
    auto& r = out.report;
    r = Report("automorphism of " + b.name());
    const auto inv = try_invert(m, b.one());
    r.add("invertible", inv.has_value(), inv ? std::nullopt : std::optional<Witness>(Witness{{}, {}, {}, "singular matrix"}));
    r.add(compare_maps("multiplicative", m * b.mult(), b.mult() * kron(m, m), h2, h1, f));
    r.add(compare_maps("unital", m * b.unit(), b.unit(), unit_dims, h1, f));
    r.add(compare_maps("comultiplicative", b.comult() * m, kron(m, m) * b.comult(), h1, h2, f));
    r.add(compare_maps("counital", b.counit() * m, b.counit(), h1, unit_dims, f));
    r.add(compare_maps("commutes_with_antipode", s * m, m * s, h1, h1, f));
    if (r.all_hold()) out.automorphism = HqgAutomorphism<F>(std::move(base), m, *inv);
    return out;
}

/// Throws PreconditionViolated listing the failed axioms.
template <ExactField F>
HqgAutomorphism<F> make_automorphism(BasePtr<F> base, const LinMap<F>& m) {
    auto c = check_automorphism(std::move(base), m);
    if (c.automorphism) return std::move(*c.automorphism);
    std::string failed;
    for (const auto& k : c.report.checks())
        if (!k.holds) failed += (failed.empty() ? "" : ", ") + k.name;
    throw PreconditionViolated("not a Hopf quasigroup automorphism: " + failed);
}

/// Basis permutation σ as the matrix e_i ↦ e_σ(i).
template <ExactField F>
LinMap<F> permutation_matrix(const Permutation& sigma, const F& one) {
    const std::vector<std::size_t> image(sigma.begin(), sigma.end());
    return LinMap<F>::from_basis_map(image.size(), image, one);
}

template <ExactField F>
struct GPair {
    HqgAutomorphism<F> alpha;
    HqgAutomorphism<F> beta;

    const BasePtr<F>& base() const { return alpha.base(); }
    friend bool operator==(const GPair&, const GPair&) = default;
};

template <ExactField F>
GPair<F> make_gpair(HqgAutomorphism<F> a, HqgAutomorphism<F> b) {
    require_same_base(a.base(), b.base(), "automorphism pair");
    return GPair<F>{std::move(a), std::move(b)};
}

template <ExactField F>
GPair<F> gpair_identity(const BasePtr<F>& base) {
    return GPair<F>{HqgAutomorphism<F>::identity(base), HqgAutomorphism<F>::identity(base)};
}

/// (α,β)∗(γ,δ) = (αγ, δγ⁻¹βγ). Throws BaseMismatch.
template <ExactField F>
GPair<F> gpair_mul(const GPair<F>& p, const GPair<F>& q) {
    require_same_base(p.base(), q.base(), "gpair_mul");
    const auto& g = q.alpha;
    return GPair<F>{p.alpha.then_after(g), q.beta.then_after(g.inverted()).then_after(p.beta).then_after(g)};
}

/// (α,β)⁻¹ = (α⁻¹, αβ⁻¹α⁻¹).
template <ExactField F>
GPair<F> gpair_inv(const GPair<F>& p) {
    const auto ai = p.alpha.inverted();
    return GPair<F>{ai, p.alpha.then_after(p.beta.inverted()).then_after(ai)};
}

/// Unit, two-sided inverse and associativity over every pair drawn from
/// `autos`; witnesses are index tuples into the pair list (i·n + j order).
template <ExactField F>
Report check_gpair_group(const std::vector<HqgAutomorphism<F>>& autos) {
    if (autos.empty()) throw PreconditionViolated("no automorphisms supplied");
    std::vector<GPair<F>> pairs;
    for (const auto& a : autos)
        for (const auto& b : autos) pairs.push_back(make_gpair(a, b));
    const auto e = gpair_identity(autos.front().base());
    Report r("group G^2");
    std::optional<Witness> unit, inverse, closed_inverse, assoc;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if (!unit && !(gpair_mul(p, e) == p && gpair_mul(e, p) == p)) unit = Witness{{i}, {}, {}, "p*(id,id) or (id,id)*p differs from p"};
        const auto pi = gpair_inv(p);
        if (!inverse && !(gpair_mul(p, pi) == e && gpair_mul(pi, p) == e)) inverse = Witness{{i}, {}, {}, "p*p^-1 or p^-1*p is not (id,id)"};
        if (!closed_inverse && !(gpair_inv(pi) == p)) closed_inverse = Witness{{i}, {}, {}, "inverse is not an involution"};
    }
    // Products are located in the pair list by their matrices, so
    // associativity reduces to the multiplication table; a product outside
    // the list is compared directly.
    const auto& f = autos.front().base()->field();
    auto key = [&](const GPair<F>& p) {
        std::string k;
        for (const auto* m : {&p.alpha.matrix(), &p.beta.matrix()})
            for (std::size_t j = 0; j < m->cols(); ++j) {
                for (const auto& e : m->column(j)) k += std::to_string(e.row) + ':' + f.format(e.value) + ',';
                k += ';';
            }
        return k;
    };
    std::map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < pairs.size(); ++i) where.emplace(key(pairs[i]), i);
    constexpr std::size_t outside = ~std::size_t{0};
    std::vector<std::vector<std::size_t>> table(pairs.size(), std::vector<std::size_t>(pairs.size(), outside));
    std::vector<std::vector<GPair<F>>> prod(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            prod[i].push_back(gpair_mul(pairs[i], pairs[j]));
            const auto it = where.find(key(prod[i][j]));
            if (it != where.end()) table[i][j] = it->second;
        }
    for (std::size_t i = 0; i < pairs.size() && !assoc; ++i)
        for (std::size_t j = 0; j < pairs.size() && !assoc; ++j)
            for (std::size_t k = 0; k < pairs.size() && !assoc; ++k) {
                const auto ij = table[i][j], jk = table[j][k];
                const bool ok = ij != outside && jk != outside && table[ij][k] != outside && table[i][jk] != outside
                                    ? table[ij][k] == table[i][jk]
                                    : gpair_mul(prod[i][j], pairs[k]) == gpair_mul(pairs[i], prod[j][k]);
                if (!ok) assoc = Witness{{i, j, k}, {}, {}, "(p*q)*r differs from p*(q*r)"};
            }
    r.add("unit", !unit, unit);
    r.add("inverse", !inverse, inverse);
    r.add("inverse_involution", !closed_inverse, closed_inverse);
    r.add("associative", !assoc, assoc);
    r.note("pairs", pairs.size());
    return r;
}

}  // namespace hqg

#endif
