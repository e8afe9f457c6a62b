// The characterizations of Hopf algebras and Hopf quasigroups: every
// condition is decided on its own from the structure constants, then the
// verdicts are compared.

#ifndef HQG_HOPF_EQUIVALENCE_HPP
#define HQG_HOPF_EQUIVALENCE_HPP

#include <string>
#include <vector>

#include "hqg/hopf/axioms.hpp"

namespace hqg {

enum class Theorem { t31, t43 };

inline std::string_view to_string(Theorem t) { return t == Theorem::t31 ? "t31" : "t43"; }

inline Theorem parse_theorem(std::string_view s) {
    if (s == "t31") return Theorem::t31;
    if (s == "t43") return Theorem::t43;
    throw FormatError("unknown theorem '" + std::string(s) + "'");
}

namespace detail {

/// Some K with K∘A = rhs (A square), or nullopt.
template <ExactField F>
std::optional<LinMap<F>> solve_right(const LinMap<F>& a, const LinMap<F>& rhs) {
    const auto x = solve(a.transpose().to_dense(), rhs.transpose().to_dense());
    if (!x) return std::nullopt;
    return LinMap<F>::from_dense(x->transpose());
}

/// Existence of a two-sided convolution inverse of L (or R) in H*End(H):
/// solve the left-inverse equation, then test the solution on the right.
/// H*End(H) is associative, so a two-sided inverse exists iff this
/// particular left inverse is also a right inverse.
template <ExactField F>
Check multiplication_invertible(const Bialgebra<F>& b, bool left, std::string name) {
    const auto galois = left ? galois_matrix(b, GaloisSide::T1) : right_galois(b);
    const auto eps_id = kron(b.counit(), b.id());
    const auto k = solve_right(galois, eps_id);
    if (!k) return Check{std::move(name), false, Witness{{}, {}, {}, "no left convolution inverse"}};
    const auto products = left ? left_products(b, *k) : right_products(b, *k);
    auto c = compare_maps(name, products.second, eps_id, tensor_dims(b, 2), Dims{b.dim()}, b.field());
    if (c.witness) c.witness->detail = "left inverse is not a right inverse";
    return c;
}

template <ExactField F>
Check galois_condition(const Bialgebra<F>& b, GaloisSide side, GaloisCondition cond, std::string name) {
    const auto inv = try_invert(galois_matrix(b, side), b.one());
    if (!inv) return Check{std::move(name), false, Witness{{}, {}, {}, std::string(to_string(side)) + " is not bijective"}};
    const auto flags = check_galois_compat(b, side, cond);
    for (const auto& c : flags.checks())
        if (!c.holds) {
            Check out{std::move(name), false, c.witness};
            if (!out.witness) out.witness = Witness{};
            out.witness->detail = c.name + " fails";
            return out;
        }
    return Check{std::move(name), true, std::nullopt};
}

template <ExactField F>
Check antipode_solvable(const Bialgebra<F>& b, AntipodeMode mode, std::string name) {
    const auto zero = LinMap<F>(b.dim(), b.dim());
    std::vector<LinMap<F>> rhs;
    for (auto& id : antipode_identities(b, zero, mode)) rhs.push_back(std::move(id.rhs));
    auto op = [&](const LinMap<F>& s) {
        std::vector<LinMap<F>> out;
        for (auto& id : antipode_identities(b, s, mode)) out.push_back(std::move(id.lhs));
        return out;
    };
    const auto s = solve_for_map(b.dim(), b.dim(), op, rhs, b.field());
    if (!s) return Check{std::move(name), false, Witness{{}, {}, {}, "antipode equations are inconsistent"}};
    return Check{std::move(name), true, std::nullopt};
}

template <ExactField F>
Check id_convolution_invertible(const Bialgebra<F>& b, std::string name) {
    const auto i = b.id();
    const auto ue = b.unit() * b.counit();
    auto left = [&](const LinMap<F>& x) { return std::vector<LinMap<F>>{b.mult() * kron(x, i) * b.comult()}; };
    const auto s = solve_for_map(b.dim(), b.dim(), left, {ue}, b.field());
    if (!s) return Check{std::move(name), false, Witness{{}, {}, {}, "id has no left convolution inverse"}};
    auto c = compare_maps(name, b.mult() * kron(i, *s) * b.comult(), ue, Dims{b.dim()}, Dims{b.dim()}, b.field());
    if (c.witness) c.witness->detail = "left inverse is not a right inverse";
    return c;
}

}  // namespace detail

/// Per-condition verdicts plus `conditions_agree`. t31 needs an associative
/// and coassociative bialgebra, t43 a coassociative one (PreconditionViolated
/// otherwise).
template <ExactField F>
Report equivalence_report(const Bialgebra<F>& b, Theorem theorem) {
    detail::require(b, theorem == Theorem::t31, true);
    std::vector<Check> conds;
    if (theorem == Theorem::t31) {
        conds.push_back(detail::antipode_solvable(b, AntipodeMode::hopf, "(1) antipode exists"));
        conds.push_back(detail::id_convolution_invertible(b, "(2) id invertible in H*H"));
        conds.push_back(detail::galois_condition(b, GaloisSide::T1, GaloisCondition::thm31_module_comodule,
                                                 "(3) T1 bijective, inverse right-module and left-comodule map"));
        conds.push_back(detail::galois_condition(b, GaloisSide::T2, GaloisCondition::thm31_module_comodule,
                                                 "(4) T2 bijective, inverse left-module and right-comodule map"));
        conds.push_back(detail::multiplication_invertible(b, true, "(5) L invertible in H*End(H)"));
        conds.push_back(detail::multiplication_invertible(b, false, "(6) R invertible in H*End(H)"));
    } else {
        conds.push_back(detail::antipode_solvable(b, AntipodeMode::quasigroup, "(1) quasigroup antipode exists"));
        auto t1 = detail::galois_condition(b, GaloisSide::T1, GaloisCondition::def41_42_compat, "");
        auto t2 = detail::galois_condition(b, GaloisSide::T2, GaloisCondition::def41_42_compat, "");
        Check c2{"(2) T1, T2 bijective with induced compatibilities", t1.holds && t2.holds,
                 !t1.holds ? t1.witness : t2.witness};
        conds.push_back(std::move(c2));
        const auto l = detail::multiplication_invertible(b, true, "");
        const auto r = detail::multiplication_invertible(b, false, "");
        conds.push_back(Check{"(3) L and R invertible in H*End(H)", l.holds && r.holds, !l.holds ? l.witness : r.witness});
    }
    Report rep(std::string("equivalence ") + std::string(to_string(theorem)));
    for (const auto& c : conds) rep.add(c);
    std::optional<Witness> disagreement;
    for (std::size_t k = 1; k < conds.size() && !disagreement; ++k)
        if (conds[k].holds != conds[0].holds)
            disagreement = Witness{{0, k}, {}, {}, conds[0].name.substr(0, 3) + " vs " + conds[k].name.substr(0, 3)};
    rep.add("conditions_agree", !disagreement, disagreement);
    auto verdicts = nlohmann::ordered_json::array();
    for (const auto& c : conds) verdicts.push_back(c.holds);
    rep.note("verdicts", verdicts);
    return rep;
}

}  // namespace hqg

#endif
