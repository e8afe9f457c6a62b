// Antipode axioms in the Hopf, Hopf-quasigroup and Hopf-coquasigroup
// settings, the flexible and Moufang identities, and invertibility of the left
// and right multiplication elements in the convolution algebra H*End(H).

#ifndef HQG_HOPF_AXIOMS_HPP
#define HQG_HOPF_AXIOMS_HPP

#include <string>

#include "hqg/hopf/galois.hpp"

namespace hqg {

enum class AntipodeMode { hopf, quasigroup, coquasigroup };
enum class HqgIdentity { flexible, moufang };
enum class HqgVariant { quasigroup, coquasigroup };

inline std::string_view to_string(AntipodeMode m) {
    switch (m) {
        case AntipodeMode::hopf: return "hopf";
        case AntipodeMode::quasigroup: return "quasigroup";
        case AntipodeMode::coquasigroup: return "coquasigroup";
    }
    return "?";
}

inline AntipodeMode parse_antipode_mode(std::string_view s) {
    for (auto m : {AntipodeMode::hopf, AntipodeMode::quasigroup, AntipodeMode::coquasigroup})
        if (to_string(m) == s) return m;
    throw FormatError("unknown antipode mode '" + std::string(s) + "'");
}

inline std::string_view to_string(HqgIdentity m) { return m == HqgIdentity::flexible ? "flexible" : "moufang"; }
inline std::string_view to_string(HqgVariant v) { return v == HqgVariant::quasigroup ? "quasigroup" : "coquasigroup"; }

inline HqgIdentity parse_hqg_identity(std::string_view s) {
    if (s == "flexible") return HqgIdentity::flexible;
    if (s == "moufang") return HqgIdentity::moufang;
    throw FormatError("unknown identity '" + std::string(s) + "'");
}

inline HqgVariant parse_hqg_variant(std::string_view s) {
    if (s == "quasigroup") return HqgVariant::quasigroup;
    if (s == "coquasigroup") return HqgVariant::coquasigroup;
    throw FormatError("unknown variant '" + std::string(s) + "'");
}

namespace detail {

template <ExactField F>
void require(const Bialgebra<F>& b, bool assoc, bool coassoc) {
    if (assoc && !b.associative()) throw PreconditionViolated("associative: product of '" + b.name() + "' is not associative");
    if (coassoc && !b.coassociative())
        throw PreconditionViolated("coassociative: coproduct of '" + b.name() + "' is not coassociative");
}

/// Left-hand sides of the antipode identities as maps linear in S, paired
/// with their right-hand sides. Inputs are h (Hopf, coquasigroup) or h⊗g.
template <ExactField F>
struct AntipodeIdentity {
    std::string name;
    LinMap<F> lhs;
    LinMap<F> rhs;
    Dims in, out;
};

template <ExactField F>
std::vector<AntipodeIdentity<F>> antipode_identities(const Bialgebra<F>& b, const LinMap<F>& s, AntipodeMode mode) {
    const auto i = b.id();
    const auto &m = b.mult(), &d = b.comult(), &e = b.counit(), &u = b.unit();
    const Dims h1{b.dim()}, h2 = tensor_dims(b, 2);
    std::vector<AntipodeIdentity<F>> out;
    switch (mode) {
        case AntipodeMode::hopf:
            out.push_back({"S(h1)h2=e(h)1", m * kron(s, i) * d, u * e, h1, h1});
            out.push_back({"h1S(h2)=e(h)1", m * kron(i, s) * d, u * e, h1, h1});
            break;
        case AntipodeMode::quasigroup: {
            const auto eg = kron(e, i);  // (h, g) ↦ ε(h) g
            const auto swap = b.permute({1, 0});
            out.push_back({"S(h1)(h2g)=e(h)g", m * kron(s, m) * kron(d, i), eg, h2, h1});
            out.push_back({"h1(S(h2)g)=e(h)g", m * kron(i, m) * kron(i, s, i) * kron(d, i), eg, h2, h1});
            out.push_back({"(gS(h1))h2=e(h)g", m * kron(m, i) * kron(i, s, i) * kron(i, d) * swap, eg, h2, h1});
            out.push_back({"(gh1)S(h2)=e(h)g", m * kron(m, i) * kron(i, i, s) * kron(i, d) * swap, eg, h2, h1});
            break;
        }
        case AntipodeMode::coquasigroup: {
            const auto one_h = kron(u, i), h_one = kron(i, u);
            out.push_back({"S(h1)h21(x)h22=1(x)h", kron(m, i) * kron(s, i, i) * kron(i, d) * d, one_h, h1, h2});
            out.push_back({"h1S(h21)(x)h22=1(x)h", kron(m, i) * kron(i, s, i) * kron(i, d) * d, one_h, h1, h2});
            out.push_back({"h11(x)S(h12)h2=h(x)1", kron(i, m) * kron(i, s, i) * kron(d, i) * d, h_one, h1, h2});
            out.push_back({"h11(x)h12S(h2)=h(x)1", kron(i, m) * kron(i, i, s) * kron(d, i) * d, h_one, h1, h2});
            break;
        }
    }
    return out;
}

}  // namespace detail

/// Checks the antipode identities of the chosen setting for the candidate s
/// over all basis inputs. Throws PreconditionViolated when the setting's
/// (co)associativity requirement fails.
template <ExactField F>
Report check_antipode_axioms(const Bialgebra<F>& b, const LinMap<F>& s, AntipodeMode mode) {
    detail::require(b, mode != AntipodeMode::quasigroup, mode != AntipodeMode::coquasigroup);
    if (s.rows() != b.dim() || s.cols() != b.dim()) throw DimensionMismatch("antipode candidate shape");
    Report r(std::string("antipode ") + std::string(to_string(mode)));
    for (const auto& id : detail::antipode_identities(b, s, mode))
        r.add(compare_maps(id.name, id.lhs, id.rhs, id.in, id.out, b.field()));
    return r;
}

/// Flexible and Moufang identities. Quasigroup inputs are h⊗g (flexible) and
/// h⊗g⊗f (Moufang); coquasigroup inputs are single h. Iterated coproducts are
/// bracketed as written, so no coassociativity is assumed for the
/// coquasigroup forms.
template <ExactField F>
Report check_hqg_identity(const Bialgebra<F>& b, HqgIdentity mode, HqgVariant variant) {
    detail::require(b, variant == HqgVariant::coquasigroup, variant == HqgVariant::quasigroup);
    const auto i = b.id();
    const auto &m = b.mult(), &d = b.comult();
    const Dims h1{b.dim()}, h2 = tensor_dims(b, 2), h3 = tensor_dims(b, 3);
    Report r(std::string(to_string(variant)) + " " + std::string(to_string(mode)));
    if (variant == HqgVariant::quasigroup) {
        if (mode == HqgIdentity::flexible) {
            const auto spread = b.permute({0, 2, 1}) * kron(d, i);  // h⊗g ↦ h1⊗g⊗h2
            r.add(compare_maps("h1(gh2)=(h1g)h2", m * kron(i, m) * spread, m * kron(m, i) * spread, h2, h1, b.field()));
        } else {
            const auto spread = b.permute({0, 2, 1, 3}) * kron(d, i, i);  // h⊗g⊗f ↦ h1⊗g⊗h2⊗f
            r.add(compare_maps("h1(g(h2f))=((h1g)h2)f", m * kron(i, m) * kron(i, i, m) * spread,
                               m * kron(m, i) * kron(m, i, i) * spread, h3, h1, b.field()));
        }
    } else {
        if (mode == HqgIdentity::flexible) {
            const auto lhs = kron(m, i) * b.permute({0, 2, 1}) * kron(i, d) * d;
            const auto rhs = kron(m, i) * b.permute({0, 2, 1}) * kron(d, i) * d;
            r.add(compare_maps("h1h22(x)h21=h11h2(x)h12", lhs, rhs, h1, h2, b.field()));
        } else {
            // h1⊗h21⊗h221⊗h222 ↦ h1 h221 ⊗ h21 ⊗ h222
            const auto lhs = kron(m, i, i) * b.permute({0, 2, 1, 3}) * kron(i, i, d) * kron(i, d) * d;
            // h111⊗h112⊗h12⊗h2 ↦ h111 h12 ⊗ h112 ⊗ h2
            const auto rhs = kron(m, i, i) * b.permute({0, 2, 1, 3}) * kron(d, i, i) * kron(d, i) * d;
            r.add(compare_maps("h1h221(x)h21(x)h222=h111h12(x)h112(x)h2", lhs, rhs, h1, h3, b.field()));
        }
    }
    return r;
}

namespace detail {

/// K ↦ (L' * L, L * L') for L'(a)(c) = K(a⊗c): the maps a⊗b ↦ Σ K(a1⊗a2b)
/// and a⊗b ↦ Σ a1 K(a2⊗b).
template <ExactField F>
std::pair<LinMap<F>, LinMap<F>> left_products(const Bialgebra<F>& b, const LinMap<F>& k) {
    const auto i = b.id();
    return {k * galois_matrix(b, GaloisSide::T1), b.mult() * kron(i, k) * kron(b.comult(), i)};
}

/// The map a⊗b ↦ a1 ⊗ b a2 that plays the part of T1 for right multiplication.
template <ExactField F>
LinMap<F> right_galois(const Bialgebra<F>& b) {
    const auto i = b.id();
    return kron(i, b.mult()) * b.permute({0, 2, 1}) * kron(b.comult(), i);
}

/// K ↦ (R' * R, R * R') for R'(a)(c) = K(a⊗c): a⊗b ↦ Σ K(a1⊗b a2) and
/// a⊗b ↦ Σ K(a2⊗b) a1.
template <ExactField F>
std::pair<LinMap<F>, LinMap<F>> right_products(const Bialgebra<F>& b, const LinMap<F>& k) {
    const auto i = b.id();
    // a1⊗a2⊗b ↦ a2⊗b⊗a1
    return {k * right_galois(b), b.mult() * kron(k, i) * b.permute({1, 2, 0}) * kron(b.comult(), i)};
}

}  // namespace detail

/// Checks that L'(a) = left multiplication by S(a) and R'(a) = right
/// multiplication by S^{-1}(a) are two-sided convolution inverses of L and R,
/// with S extracted from T1. Throws NoAntipodeExtractable when T1 is singular.
template <ExactField F>
Report lr_convolution_invertible(const Bialgebra<F>& b) {
    detail::require(b, false, true);
    LinMap<F> s;
    try {
        s = antipode_extract(b, GaloisSide::T1);
    } catch (const NotBijective&) {
        throw NoAntipodeExtractable("T1 of '" + b.name() + "' is singular, no antipode can be extracted");
    }
    const auto s_inv = try_invert(s, b.one());
    const auto i = b.id();
    const auto& f = b.field();
    const Dims h1{b.dim()}, h2 = tensor_dims(b, 2);
    const auto eps_id = kron(b.counit(), i);
    Report r("convolution inverses of L and R");
    const auto [l_left, l_right] = detail::left_products(b, LinMap<F>(b.mult() * kron(s, i)));
    r.add(compare_maps("L'*L=e", l_left, eps_id, h2, h1, f));
    r.add(compare_maps("L*L'=e", l_right, eps_id, h2, h1, f));
    if (!s_inv) {
        r.add("R'*R=e", false, Witness{{}, {}, {}, "extracted antipode is singular"});
        r.add("R*R'=e", false, Witness{{}, {}, {}, "extracted antipode is singular"});
        return r;
    }
    // K(a⊗c) = c S^{-1}(a)
    const LinMap<F> k_r = b.mult() * b.permute({1, 0}) * kron(*s_inv, i);
    const auto [r_left, r_right] = detail::right_products(b, k_r);
    r.add(compare_maps("R'*R=e", r_left, eps_id, h2, h1, f));
    r.add(compare_maps("R*R'=e", r_right, eps_id, h2, h1, f));
    return r;
}

}  // namespace hqg

#endif
