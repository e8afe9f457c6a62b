// Galois maps T1(x⊗y) = Δ(x)(1⊗y), T2(x⊗y) = (x⊗1)Δ(y), their inverses,
// antipode extraction from the inverses, and the structural conditions an
// inverse has to satisfy.

#ifndef HQG_HOPF_GALOIS_HPP
#define HQG_HOPF_GALOIS_HPP

#include <optional>
#include <string>

#include "hqg/hopf/bialgebra.hpp"

namespace hqg {

template <ExactField F>
LinMap<F> galois_matrix(const Bialgebra<F>& b, GaloisSide which) {
    const auto i = b.id();
    if (which == GaloisSide::T1) return kron(i, b.mult()) * kron(b.comult(), i);
    return kron(b.mult(), i) * kron(i, b.comult());
}

/// a⊗b ↦ a1 ⊗ S(a2)b (T1) or a⊗b ↦ aS(b1) ⊗ b2 (T2), for a candidate S.
template <ExactField F>
LinMap<F> galois_closed_inverse(const Bialgebra<F>& b, GaloisSide which, const LinMap<F>& s) {
    const auto i = b.id();
    if (which == GaloisSide::T1) return kron(i, b.mult()) * kron(i, s, i) * kron(b.comult(), i);
    return kron(b.mult(), i) * kron(i, s, i) * kron(i, b.comult());
}

template <ExactField F>
struct GaloisReport {
    GaloisSide which = GaloisSide::T1;
    bool bijective = false;
    std::size_t rank = 0;
    std::optional<LinMap<F>> inverse;                // present iff bijective
    std::optional<bool> formula_inverse_matches;     // needs a stored antipode
    std::optional<Witness> formula_witness;

    Report to_report() const {
        Report r(std::string("galois ") + std::string(to_string(which)));
        r.add("bijective", bijective);
        if (formula_inverse_matches) r.add("closed_form_inverse", *formula_inverse_matches, formula_witness);
        r.note("rank", rank);
        return r;
    }
};

template <ExactField F>
GaloisReport<F> invert_galois(const Bialgebra<F>& b, GaloisSide which) {
    GaloisReport<F> g;
    g.which = which;
    const auto t = galois_matrix(b, which);
    const auto dense = t.to_dense();
    g.rank = rank(dense);
    g.bijective = g.rank == t.rows();
    if (g.bijective) g.inverse = LinMap<F>::from_dense(invert(dense, b.one()));
    if (g.bijective && b.antipode()) {
        const auto closed = galois_closed_inverse(b, which, *b.antipode());
        const auto c = compare_maps("closed_form_inverse", *g.inverse, closed, tensor_dims(b, 2), tensor_dims(b, 2), b.field());
        g.formula_inverse_matches = c.holds;
        g.formula_witness = c.witness;
    } else if (!g.bijective && b.antipode()) {
        g.formula_inverse_matches = false;
    }
    return g;
}

/// S(a) = (ε⊗id) T1^{-1}(a⊗1) or S'(a) = (id⊗ε) T2^{-1}(1⊗a). Throws
/// NotBijective.
template <ExactField F>
LinMap<F> antipode_extract(const Bialgebra<F>& b, GaloisSide which) {
    const auto t = galois_matrix(b, which);
    const auto inv = try_invert(t, b.one());
    if (!inv) throw NotBijective(std::string(to_string(which)) + " is not bijective");
    const auto i = b.id();
    if (which == GaloisSide::T1) return kron(b.counit(), i) * *inv * kron(i, b.unit());
    return kron(i, b.counit()) * *inv * kron(b.unit(), i);
}

enum class GaloisCondition { thm31_module_comodule, def41_42_compat };

inline std::string_view to_string(GaloisCondition c) {
    return c == GaloisCondition::thm31_module_comodule ? "thm31_module_comodule" : "def41_42_compat";
}

inline GaloisCondition parse_galois_condition(std::string_view s) {
    if (s == "thm31_module_comodule" || s == "thm31") return GaloisCondition::thm31_module_comodule;
    if (s == "def41_42_compat" || s == "def41_42") return GaloisCondition::def41_42_compat;
    throw FormatError("unknown Galois condition '" + std::string(s) + "'");
}

namespace detail {

/// Module and comodule maps on H⊗H. The right action takes (x⊗y)⊗a to x⊗ya,
/// the left action a⊗(x⊗y) to ax⊗y; the comodules use Δ on the outer factor.
template <ExactField F>
Report module_comodule_flags(const Bialgebra<F>& b, GaloisSide which, const LinMap<F>& t) {
    const auto i = b.id();
    const auto& m = b.mult();
    const auto& d = b.comult();
    const auto& f = b.field();
    const Dims h2 = tensor_dims(b, 2), h3 = tensor_dims(b, 3);
    Report r(std::string("galois ") + std::string(to_string(which)) + " module/comodule");
    if (which == GaloisSide::T1) {
        r.add(compare_maps("right_module_map", t * kron(i, m), kron(i, m) * kron(t, i), h3, h2, f));
        r.add(compare_maps("left_comodule_map", kron(d, i) * t, kron(i, t) * kron(d, i), h2, h3, f));
    } else {
        r.add(compare_maps("left_module_map", t * kron(m, i), kron(m, i) * kron(i, t), h3, h2, f));
        r.add(compare_maps("right_comodule_map", kron(i, d) * t, kron(t, i) * kron(i, d), h2, h3, f));
    }
    return r;
}

/// Every compatibility of T with the coproducts Δ^r_T, Δ^l_T and the products
/// m^r_T, m^l_T it induces. Check names: {left,right}_compatible_{delta_r,
/// delta_l,m_r,m_l}.
template <ExactField F>
Report induced_compatibility(const Bialgebra<F>& b, const LinMap<F>& t) {
    const auto i = b.id();
    const auto& m = b.mult();
    const auto& d = b.comult();
    const auto& f = b.field();
    const Dims h2 = tensor_dims(b, 2);
    const LinMap<F> delta_r = t * kron(i, b.unit());
    const LinMap<F> delta_l = t * kron(b.unit(), i);
    const LinMap<F> m_r = kron(i, b.counit()) * t;
    const LinMap<F> m_l = kron(b.counit(), i) * t;
    Report r("induced compatibility");
    // T(a⊗b) = Δ_T(a)(1⊗b)  /  T(a⊗b) = (a⊗1)Δ_T(b)
    r.add(compare_maps("left_compatible_delta_r", t, kron(i, m) * kron(delta_r, i), h2, h2, f));
    r.add(compare_maps("right_compatible_delta_r", t, kron(m, i) * kron(i, delta_r), h2, h2, f));
    r.add(compare_maps("left_compatible_delta_l", t, kron(i, m) * kron(delta_l, i), h2, h2, f));
    r.add(compare_maps("right_compatible_delta_l", t, kron(m, i) * kron(i, delta_l), h2, h2, f));
    // T = (m_T⊗1)(1⊗Δ)  /  T = (1⊗m_T)(Δ⊗1)
    r.add(compare_maps("left_compatible_m_r", t, kron(m_r, i) * kron(i, d), h2, h2, f));
    r.add(compare_maps("right_compatible_m_r", t, kron(i, m_r) * kron(d, i), h2, h2, f));
    r.add(compare_maps("left_compatible_m_l", t, kron(m_l, i) * kron(i, d), h2, h2, f));
    r.add(compare_maps("right_compatible_m_l", t, kron(i, m_l) * kron(d, i), h2, h2, f));
    return r;
}

}  // namespace detail

/// The conditions on the inverse Galois map. For thm31_module_comodule:
/// T1^{-1} right-module and left-comodule map (T2^{-1}: left-module and
/// right-comodule). For def41_42_compat: T1^{-1} left compatible with Δ^r and
/// right compatible with m^l (T2^{-1}: right with Δ^l, left with m^r); the
/// remaining six flags are recorded as facts. Throws NotBijective.
template <ExactField F>
Report check_galois_compat(const Bialgebra<F>& b, GaloisSide which, GaloisCondition condition) {
    const auto inv = try_invert(galois_matrix(b, which), b.one());
    if (!inv) throw NotBijective(std::string(to_string(which)) + " is not bijective");
    if (condition == GaloisCondition::thm31_module_comodule) return detail::module_comodule_flags(b, which, *inv);
    const auto all = detail::induced_compatibility(b, *inv);
    Report r(std::string("galois ") + std::string(to_string(which)) + " induced compatibility");
    const bool t1 = which == GaloisSide::T1;
    const std::string first = t1 ? "left_compatible_delta_r" : "right_compatible_delta_l";
    const std::string second = t1 ? "right_compatible_m_l" : "left_compatible_m_r";
    nlohmann::ordered_json others = nlohmann::ordered_json::object();
    for (const auto& c : all.checks()) {
        if (c.name == first || c.name == second)
            r.add(c);
        else
            others[c.name] = c.holds;
    }
    r.note("other_flags", std::move(others));
    return r;
}

}  // namespace hqg

#endif
