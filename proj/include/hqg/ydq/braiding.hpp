// The braiding c_{M,N}: M⊗N → ᴹN⊗M, its inverse, the braided-category
// identities and the crossed-structure identities.

#ifndef HQG_YDQ_BRAIDING_HPP
#define HQG_YDQ_BRAIDING_HPP

#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "hqg/ydq/module.hpp"

namespace hqg {

enum class BraidDirection { forward, inverse };

/// ᴹN = ^{index of M}N.
template <ExactField F>
YDQModule<F> left_index(const YDQModule<F>& m, const YDQModule<F>& n) {
    return conjugate_ydq(m.index(), n);
}

/// forward: m⊗n ↦ n0 ⊗ β⁻¹(n1)·m on M⊗N; inverse: n⊗m ↦ β⁻¹(S(n1))·m ⊗ n0
/// on N⊗M, where β is the second component of M's index. Throws
/// BaseMismatch.
template <ExactField F>
LinMap<F> braiding(const YDQModule<F>& m, const YDQModule<F>& n, BraidDirection direction) {
    require_same_base(m.base_ptr(), n.base_ptr(), "braiding");
    const auto& b = m.base();
    const std::size_t d = b.dim(), dm = m.dim(), dn = n.dim();
    const auto im = m.id(), in = n.id();
    const auto& beta_inv = m.index().beta.inverse();
    if (direction == BraidDirection::forward)
        return kron_apply(in, LinMap<F>(m.action() * kron(beta_inv, im)),
                          permute_rows<F>({dm, dn, d}, {1, 2, 0}, kron(im, n.coaction())));
    return kron_apply(LinMap<F>(m.action() * kron(LinMap<F>(beta_inv * b.require_antipode()), im)), in,
                      permute_rows<F>({dn, d, dm}, {1, 2, 0}, kron(n.coaction(), im)));
}

enum class BraidStep { module_map, comodule_map, hexagon1, hexagon2, naturality, bijective };

inline std::string_view to_string(BraidStep s) {
    switch (s) {
        case BraidStep::module_map: return "module_map";
        case BraidStep::comodule_map: return "comodule_map";
        case BraidStep::hexagon1: return "hexagon1";
        case BraidStep::hexagon2: return "hexagon2";
        case BraidStep::naturality: return "naturality";
        case BraidStep::bijective: return "bijective";
    }
    return "?";
}

inline BraidStep parse_braid_step(std::string_view s) {
    for (auto k : {BraidStep::module_map, BraidStep::comodule_map, BraidStep::hexagon1, BraidStep::hexagon2,
                   BraidStep::naturality, BraidStep::bijective})
        if (to_string(k) == s) return k;
    throw FormatError("unknown braiding step '" + std::string(s) + "'");
}

inline constexpr BraidStep all_braid_steps[] = {BraidStep::module_map, BraidStep::comodule_map, BraidStep::hexagon1,
                                                BraidStep::hexagon2,   BraidStep::naturality,   BraidStep::bijective};

/// Morphisms f: M → M' and g: N → N' for the naturality square.
template <ExactField F>
struct NaturalityPair {
    YDMorphism<F> f;
    YDMorphism<F> g;
};

/// One braided-category identity as an exact matrix equality. Composite
/// objects come from tensor_ydq and conjugate_ydq; p is used by the hexagons
/// only. Without morphisms naturality uses identities. Throws BaseMismatch,
/// MorphismInvalid.
template <ExactField F>
Report check_braiding_axioms(const YDQModule<F>& m, const YDQModule<F>& n, const YDQModule<F>& p, BraidStep step,
                             const std::optional<NaturalityPair<std::type_identity_t<F>>>& morphisms = std::nullopt) {
    require_same_base(m.base_ptr(), n.base_ptr(), "braiding axioms");
    require_same_base(m.base_ptr(), p.base_ptr(), "braiding axioms");
    const auto& b = m.base();
    const auto& f = b.field();
    const std::size_t d = b.dim(), dm = m.dim(), dn = n.dim(), dp = p.dim();
    const auto im = m.id(), in = n.id(), ip = p.id();
    Report r("braiding " + std::string(to_string(step)));
    switch (step) {
        case BraidStep::module_map: {
            const auto c = braiding(m, n, BraidDirection::forward);
            const auto src = tensor_ydq(m, n), dst = tensor_ydq(left_index(m, n), m);
            r.add(compare_maps("c(h.(m(x)n))=h.c(m(x)n)", c * src.action(), dst.action() * kron(b.id(), c), Dims{d, dm, dn},
                               Dims{dn, dm}, f));
            break;
        }
        case BraidStep::comodule_map: {
            const auto c = braiding(m, n, BraidDirection::forward);
            const auto src = tensor_ydq(m, n), dst = tensor_ydq(left_index(m, n), m);
            r.add(compare_maps("rho(c(m(x)n))=(c(x)id)rho(m(x)n)", dst.coaction() * c, kron(c, b.id()) * src.coaction(),
                               Dims{dm, dn}, Dims{dn, dm, d}, f));
            break;
        }
        case BraidStep::hexagon1: {
            // c_{M⊗N,P} = (c_{M,ᴺP} ⊗ id_N)(id_M ⊗ c_{N,P})
            const auto lhs = braiding(tensor_ydq(m, n), p, BraidDirection::forward);
            const auto rhs = kron(braiding(m, left_index(n, p), BraidDirection::forward), in) *
                             kron(im, braiding(n, p, BraidDirection::forward));
            r.add(compare_maps("c_{MN,P}=(c_{M,NP}(x)id)(id(x)c_{N,P})", lhs, rhs, Dims{dm, dn, dp}, Dims{dp, dm, dn}, f));
            break;
        }
        case BraidStep::hexagon2: {
            // c_{M,N⊗P} = (id_{ᴹN} ⊗ c_{M,P})(c_{M,N} ⊗ id_P)
            const auto lhs = braiding(m, tensor_ydq(n, p), BraidDirection::forward);
            const auto rhs = kron(in, braiding(m, p, BraidDirection::forward)) * kron(braiding(m, n, BraidDirection::forward), ip);
            r.add(compare_maps("c_{M,NP}=(id(x)c_{M,P})(c_{M,N}(x)id)", lhs, rhs, Dims{dm, dn, dp}, Dims{dn, dp, dm}, f));
            break;
        }
        case BraidStep::naturality: {
            auto pair = morphisms ? *morphisms
                                  : NaturalityPair<F>{YDMorphism<F>{m, m, im}, YDMorphism<F>{n, n, in}};
            if (!(pair.f.src == m) || !(pair.g.src == n))
                throw MorphismInvalid("naturality morphisms must start at the braided objects");
            pair.f = make_yd_morphism(pair.f.src, pair.f.dst, pair.f.matrix);
            pair.g = make_yd_morphism(pair.g.src, pair.g.dst, pair.g.matrix);
            // the conjugation functor is the identity on morphisms
            const auto lhs = kron(pair.g.matrix, pair.f.matrix) * braiding(m, n, BraidDirection::forward);
            const auto rhs = braiding(pair.f.dst, pair.g.dst, BraidDirection::forward) * kron(pair.f.matrix, pair.g.matrix);
            r.add(compare_maps("((^a g)(x)f)c_{U,V}=c_{U',V'}(f(x)g)", lhs, rhs, Dims{dm, dn},
                               Dims{pair.g.dst.dim(), pair.f.dst.dim()}, f));
            r.note("identity_morphisms", !morphisms.has_value());
            break;
        }
        case BraidStep::bijective: {
            const auto c = braiding(m, n, BraidDirection::forward), ci = braiding(m, n, BraidDirection::inverse);
            r.add(compare_maps("c.c^-1=id", c * ci, kron(in, im), Dims{dn, dm}, Dims{dn, dm}, f));
            r.add(compare_maps("c^-1.c=id", ci * c, kron(im, in), Dims{dm, dn}, Dims{dm, dn}, f));
            // the displayed inverse can fail while c itself is still invertible
            r.note("matrix_rank", rank(c.to_dense()));
            r.note("full_rank", dm * dn);
            break;
        }
    }
    return r;
}

namespace detail {

/// Equality of two modules as objects: dimension, index, action, coaction.
template <ExactField F>
Check same_object(std::string name, const YDQModule<F>& a, const YDQModule<F>& b, std::vector<std::size_t> input) {
    std::string what;
    if (a.dim() != b.dim())
        what = "dimensions differ";
    else if (!(a.index() == b.index()))
        what = "indices differ";
    else if (!(a.action() == b.action()))
        what = "actions differ";
    else if (!(a.coaction() == b.coaction()))
        what = "coactions differ";
    if (what.empty()) return Check{std::move(name), true, std::nullopt};
    Witness w{std::move(input), {}, {}, what};
    if (what == "actions differ" || what == "coactions differ") {
        const bool act = what == "actions differ";
        const auto& l = act ? a.action() : a.coaction();
        const auto& r = act ? b.action() : b.coaction();
        const std::size_t d = a.base().dim(), n = a.dim();
        const Dims in = act ? Dims{d, n} : Dims{n}, out = act ? Dims{n} : Dims{n, d};
        auto mw = map_witness(l, r, *first_difference(l, r), in, out, a.base().field());
        w.lhs = std::move(mw.lhs);
        w.rhs = std::move(mw.rhs);
        w.detail += " at basis " + [&] {
            std::string s;
            for (auto k : mw.input) s += (s.empty() ? "" : ",") + std::to_string(k);
            return s;
        }();
    }
    return Check{std::move(name), false, std::move(w)};
}

inline void first_failure(std::optional<Witness>& slot, const Check& c) {
    if (!slot && !c.holds) slot = c.witness ? *c.witness : Witness{};
}

}  // namespace detail

/// Crossed-structure identities over every ordered choice from `fixtures`
/// (conjugating pairs: the fixture indices plus `extra`):
///   tensor associativity (M⊗N)⊗P = M⊗(N⊗P), with its index cross-checked
///   against gpair_mul; ^{p∗q}N = ^p(^qN); ^p(M⊗N) = ^pM ⊗ ^pN; the index of
///   ^pN is p∗idx∗p⁻¹ and lies in the displayed closed form; and
///   c_{^pM,^pN} = c_{M,N}. Witness inputs index into the fixture and
///   conjugator lists.
template <ExactField F>
Report check_crossed_structure(const std::vector<YDQModule<F>>& fixtures, const std::vector<GPair<F>>& extra = {}) {
    if (fixtures.empty()) throw PreconditionViolated("crossed structure needs at least one fixture");
    for (const auto& m : fixtures) require_same_base(fixtures.front().base_ptr(), m.base_ptr(), "crossed structure");
    std::vector<GPair<F>> conj;
    for (const auto& m : fixtures) conj.push_back(m.index());
    for (const auto& p : extra) {
        require_same_base(fixtures.front().base_ptr(), p.base(), "crossed structure");
        conj.push_back(p);
    }
    const std::size_t k = fixtures.size(), c = conj.size();
    std::optional<Witness> assoc, assoc_index, conj_mul, conj_tensor, conj_index, conj_closed, braid;

    std::vector<std::vector<YDQModule<F>>> pair_tensor(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) pair_tensor[a].push_back(tensor_ydq(fixtures[a], fixtures[b]));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t e = 0; e < k; ++e) {
                const auto left = tensor_ydq(pair_tensor[a][b], fixtures[e]);
                const auto right = tensor_ydq(fixtures[a], pair_tensor[b][e]);
                detail::first_failure(assoc, detail::same_object("", left, right, {a, b, e}));
                const auto& pa = fixtures[a].index();
                const auto& pb = fixtures[b].index();
                const auto& pe = fixtures[e].index();
                if (!assoc_index && !(left.index() == gpair_mul(gpair_mul(pa, pb), pe) &&
                                      right.index() == gpair_mul(pa, gpair_mul(pb, pe)) && left.index() == right.index()))
                    assoc_index = Witness{{a, b, e}, {}, {}, "tensor index differs from the G^2 product"};
            }
    for (std::size_t x = 0; x < c; ++x) {
        const auto& p = conj[x];
        const auto pi = gpair_inv(p);
        for (std::size_t n = 0; n < k; ++n) {
            const auto pn = conjugate_ydq(p, fixtures[n]);
            const auto& q = fixtures[n].index();
            if (!conj_index && !(pn.index() == gpair_mul(gpair_mul(p, q), pi)))
                conj_index = Witness{{x, n}, {}, {}, "index of ^pN is not p*idx*p^-1"};
            // (αγα⁻¹, αβ⁻¹δγ⁻¹βγα⁻¹)
            const auto &al = p.alpha, &be = p.beta, &ga = q.alpha, &de = q.beta;
            const GPair<F> closed{al.then_after(ga).then_after(al.inverted()),
                                  al.then_after(be.inverted())
                                      .then_after(de)
                                      .then_after(ga.inverted())
                                      .then_after(be)
                                      .then_after(ga)
                                      .then_after(al.inverted())};
            if (!conj_closed && !(pn.index() == closed))
                conj_closed = Witness{{x, n}, {}, {}, "index of ^pN differs from the closed form"};
            for (std::size_t y = 0; y < c; ++y)
                detail::first_failure(conj_mul, detail::same_object("", conjugate_ydq(gpair_mul(p, conj[y]), fixtures[n]),
                                                                    conjugate_ydq(p, conjugate_ydq(conj[y], fixtures[n])),
                                                                    {x, y, n}));
            for (std::size_t m = 0; m < k; ++m) {
                detail::first_failure(conj_tensor,
                                      detail::same_object("", conjugate_ydq(p, pair_tensor[m][n]),
                                                          tensor_ydq(conjugate_ydq(p, fixtures[m]), pn), {x, m, n}));
                const auto pm = conjugate_ydq(p, fixtures[m]);
                const auto lhs = braiding(fixtures[m], fixtures[n], BraidDirection::forward);
                const auto rhs = braiding(pm, pn, BraidDirection::forward);
                if (!braid && !(lhs == rhs)) {
                    auto cmp = compare_maps("", rhs, lhs, Dims{fixtures[m].dim(), fixtures[n].dim()},
                                            Dims{fixtures[n].dim(), fixtures[m].dim()}, fixtures[m].base().field());
                    braid = cmp.witness;
                    braid->detail = "c_{^pM,^pN} differs from c_{M,N} for conjugator " + std::to_string(x) + ", fixtures " +
                                    std::to_string(m) + "," + std::to_string(n);
                }
            }
        }
    }
    Report r("crossed structure");
    r.add("tensor_associative", !assoc, assoc);
    r.add("tensor_index_matches_gpair", !assoc_index, assoc_index);
    r.add("conjugation_multiplicative", !conj_mul, conj_mul);
    r.add("conjugation_monoidal", !conj_tensor, conj_tensor);
    r.add("conjugation_index_law", !conj_index, conj_index);
    r.add("conjugation_index_closed_form", !conj_closed, conj_closed);
    r.add("braiding_conjugation_invariant", !braid, braid);
    r.note("fixtures", k);
    r.note("conjugators", c);
    return r;
}

}  // namespace hqg

#endif
