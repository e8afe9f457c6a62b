// (α,β)-Yetter-Drinfeld quasimodules: a left H-action H⊗M → M, a right
// H-coaction M → M⊗H and an index in G². Tensor and conjugation functors,
// the H_{α,β} family and the morphism spaces.

#ifndef HQG_YDQ_MODULE_HPP
#define HQG_YDQ_MODULE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hqg/ydq/automorphism.hpp"

namespace hqg {

/// Invariant: shapes match (action m × dim·m, coaction m·dim × m) and the
/// base antipode is bijective. The quasimodule, comodule and compatibility
/// laws are checked by check_ydq, not enforced.
template <ExactField F>
class YDQModule {
   public:
    YDQModule(GPair<F> index, std::size_t dim, LinMap<F> action, LinMap<F> coaction)
        : index_(std::move(index)), dim_(dim), action_(std::move(action)), coaction_(std::move(coaction)) {
        const std::size_t d = base().dim();
        if (dim_ == 0) throw DimensionMismatch("module of dimension 0");
        if (action_.rows() != dim_ || action_.cols() != d * dim_)
            throw DimensionMismatch("action must be " + std::to_string(dim_) + "x" + std::to_string(d * dim_));
        if (coaction_.rows() != dim_ * d || coaction_.cols() != dim_)
            throw DimensionMismatch("coaction must be " + std::to_string(dim_ * d) + "x" + std::to_string(dim_));
        s_inv_ = hqg::antipode_inverse(base());
    }

    const Bialgebra<F>& base() const { return *index_.base(); }
    const BasePtr<F>& base_ptr() const { return index_.base(); }
    const GPair<F>& index() const { return index_; }
    std::size_t dim() const { return dim_; }
    const LinMap<F>& action() const { return action_; }
    const LinMap<F>& coaction() const { return coaction_; }
    const LinMap<F>& antipode_inverse() const { return s_inv_; }
    LinMap<F> id() const { return base().id(dim_); }

    YDQModule with_action(LinMap<F> a) const { return YDQModule(index_, dim_, std::move(a), coaction_); }
    YDQModule with_coaction(LinMap<F> c) const { return YDQModule(index_, dim_, action_, std::move(c)); }

    /// Same dimension, structure maps and index.
    friend bool operator==(const YDQModule& a, const YDQModule& b) {
        return a.dim_ == b.dim_ && a.index_ == b.index_ && a.action_ == b.action_ && a.coaction_ == b.coaction_;
    }

   private:
    GPair<F> index_;
    std::size_t dim_;
    LinMap<F> action_;
    LinMap<F> coaction_;
    LinMap<F> s_inv_;
};

enum class YdqForm { eq51, eq52 };

inline std::string_view to_string(YdqForm f) { return f == YdqForm::eq51 ? "eq51" : "eq52"; }

inline YdqForm parse_ydq_form(std::string_view s) {
    if (s == "eq51") return YdqForm::eq51;
    if (s == "eq52") return YdqForm::eq52;
    throw FormatError("unknown compatibility form '" + std::string(s) + "'");
}

/// The single compatibility identity of the chosen form over all basis
/// pairs h⊗x. Both forms use the coassociativity-normalized splitting
/// h1⊗h21⊗h22 = (id⊗Δ)Δ(h).
template <ExactField F>
Check check_compatibility(const YDQModule<F>& m, YdqForm form) {
    const auto& b = m.base();
    const auto i = b.id(), im = m.id();
    const auto &mu = b.mult(), &delta = b.comult();
    const auto &act = m.action(), &rho = m.coaction();
    const auto &alpha = m.index().alpha.matrix(), &beta = m.index().beta.matrix();
    const std::size_t d = b.dim(), n = m.dim();
    const Dims in{d, n}, out{n, d};
    if (form == YdqForm::eq51) {
        // ρ(h·x) = h21·x0 ⊗ (β(h22)x1)α(S⁻¹(h1))
        auto x = kron_apply(i, kron(delta, im), kron(delta, im));  // h1⊗h21⊗h22⊗x
        x = kron_apply(b.id(d * d * d), rho, x);                   // h1⊗h21⊗h22⊗x0⊗x1
        x = permute_rows<F>({d, d, d, n, d}, {1, 3, 2, 4, 0}, x);  // h21⊗x0⊗h22⊗x1⊗h1
        const auto tail = mu * kron(mu, i) * kron(beta, i, LinMap<F>(alpha * m.antipode_inverse()));
        return compare_maps("eq51", rho * act, kron_apply(act, tail, x), in, out, b.field());
    }
    // h1·x0 ⊗ β(h2)x1 = (h2·x)0 ⊗ (h2·x)1 α(h1)
    const auto split = kron(delta, im);
    const auto lhs = kron_apply(act, LinMap<F>(mu * kron(beta, i)),
                                permute_rows<F>({d, d, n, d}, {0, 2, 1, 3}, kron_apply(b.id(d * d), rho, split)));
    const auto rhs = kron_apply(im, LinMap<F>(mu * kron(i, alpha)),
                                permute_rows<F>({d, n, d}, {1, 2, 0}, kron_apply(i, rho, kron_apply(i, act, split))));
    return compare_maps("eq52", lhs, rhs, in, out, b.field());
}

/// Quasimodule (unit, both antipode laws), comodule (counit, coassociative)
/// and the chosen compatibility identity, each as its own flag.
template <ExactField F>
Report check_ydq(const YDQModule<F>& m, YdqForm form) {
    const auto& b = m.base();
    const auto& f = b.field();
    const auto i = b.id(), im = m.id();
    const auto& s = b.require_antipode();
    const auto &act = m.action(), &rho = m.coaction();
    const std::size_t d = b.dim(), n = m.dim();
    const Dims one_in{n}, in{d, n}, co2{n, d, d};
    const auto eps_x = kron(b.counit(), im);
    Report r("yetter-drinfeld quasimodule " + std::string(to_string(form)));
    r.add(compare_maps("unit_acts_trivially", act * kron(b.unit(), im), im, one_in, one_in, f));
    const auto split = kron(b.comult(), im);
    r.add(compare_maps("a1(S(a2)x)=e(a)x", act * kron_apply(i, act, kron_apply(i, kron(s, im), split)), eps_x, in, one_in, f));
    r.add(compare_maps("S(a1)(a2x)=e(a)x", act * kron_apply(i, act, kron_apply(s, kron(i, im), split)), eps_x, in, one_in, f));
    r.add(compare_maps("comodule_counit", kron(im, b.counit()) * rho, im, one_in, one_in, f));
    r.add(compare_maps("comodule_coassociative", kron(rho, i) * rho, kron(im, b.comult()) * rho, one_in, co2, f));
    r.add(check_compatibility(m, form));
    r.note("dim", n);
    return r;
}

/// α(h1)(gβ(h2)) = (α(h1)g)β(h2) over all basis pairs h⊗g.
template <ExactField F>
Check check_ab_flexible(const Bialgebra<F>& b, const GPair<F>& p) {
    const auto i = b.id();
    const auto& m = b.mult();
    const auto spread = kron(p.alpha.matrix(), i, p.beta.matrix()) * b.permute({0, 2, 1}) * kron(b.comult(), i);
    return compare_maps("ab_flexible", m * kron(i, m) * spread, m * kron(m, i) * spread, tensor_dims(b, 2), Dims{b.dim()},
                        b.field());
}

/// H_{α,β}: h·h' = (β(h2)h')α(S⁻¹(h1)), coaction Δ.
template <ExactField F>
YDQModule<F> build_H_alpha_beta(const GPair<F>& p) {
    const auto& b = *p.base();
    const auto i = b.id();
    const auto s_inv = antipode_inverse(b);
    const auto& m = b.mult();
    const auto action = m * kron(m, i) * kron(p.beta.matrix(), i, LinMap<F>(p.alpha.matrix() * s_inv)) *
                        b.permute({1, 2, 0}) * kron(b.comult(), i);
    return YDQModule<F>(p, b.dim(), action, b.comult());
}

template <ExactField F>
struct BicomoduleCoactions {
    LinMap<F> left;   // h ↦ α(h1) ⊗ h2
    LinMap<F> right;  // h ↦ h1 ⊗ β(h2)
    Report report;
};

template <ExactField F>
BicomoduleCoactions<F> bicomodule_coactions(const Bialgebra<F>& b, const GPair<F>& p) {
    const auto i = b.id();
    const auto& f = b.field();
    const auto& delta = b.comult();
    const Dims h1{b.dim()}, h2 = tensor_dims(b, 2), h3 = tensor_dims(b, 3);
    BicomoduleCoactions<F> c{kron(p.alpha.matrix(), i) * delta, kron(i, p.beta.matrix()) * delta,
                             Report("H(alpha,beta) bicomodule")};
    c.report.add(compare_maps("left_counit", kron(b.counit(), i) * c.left, i, h1, h1, f));
    c.report.add(compare_maps("right_counit", kron(i, b.counit()) * c.right, i, h1, h1, f));
    c.report.add(compare_maps("left_coassociative", kron(i, c.left) * c.left, kron(delta, i) * c.left, h1, h3, f));
    c.report.add(compare_maps("right_coassociative", kron(c.right, i) * c.right, kron(i, delta) * c.right, h1, h3, f));
    c.report.add(compare_maps("interchange", kron(c.left, i) * c.right, kron(i, c.right) * c.left, h1, h3, f));
    return c;
}

/// M ∈ C(α,β), N ∈ C(γ,δ): h·(m⊗n) = γ(h1)·m ⊗ γ⁻¹βγ(h2)·n and
/// m⊗n ↦ (m0⊗n0) ⊗ n1m1, index (α,β)∗(γ,δ). Throws BaseMismatch.
template <ExactField F>
YDQModule<F> tensor_ydq(const YDQModule<F>& m, const YDQModule<F>& n) {
    require_same_base(m.base_ptr(), n.base_ptr(), "tensor_ydq");
    const auto& b = m.base();
    const auto i = b.id(), im = m.id(), in = n.id();
    const auto& g = n.index().alpha;
    const auto twist = g.inverted().then_after(m.index().beta).then_after(g);
    const std::size_t d = b.dim(), dm = m.dim(), dn = n.dim();
    const auto action = kron_apply(LinMap<F>(m.action() * kron(g.matrix(), im)), LinMap<F>(n.action() * kron(twist.matrix(), in)),
                                   permute_rows<F>({d, d, dm, dn}, {0, 2, 1, 3}, kron(b.comult(), im, in)));
    const auto coaction = kron_apply(b.id(dm * dn), b.mult(),
                                     permute_rows<F>({dm, d, dn, d}, {0, 2, 3, 1}, kron(m.coaction(), n.coaction())));
    return YDQModule<F>(gpair_mul(m.index(), n.index()), dm * dn, action, coaction);
}

/// ^{(α,β)}N for N ∈ C(γ,δ): h▷x = γ⁻¹βγα⁻¹(h)·x, coaction (id⊗αβ⁻¹)ρ,
/// index (α,β)∗(γ,δ)∗(α,β)⁻¹. Throws BaseMismatch.
template <ExactField F>
YDQModule<F> conjugate_ydq(const GPair<F>& p, const YDQModule<F>& n) {
    require_same_base(p.base(), n.base_ptr(), "conjugate_ydq");
    const auto& g = n.index().alpha;
    const auto twist = g.inverted().then_after(p.beta).then_after(g).then_after(p.alpha.inverted());
    const auto co = p.alpha.then_after(p.beta.inverted());
    return YDQModule<F>(gpair_mul(gpair_mul(p, n.index()), gpair_inv(p)), n.dim(), n.action() * kron(twist.matrix(), n.id()),
                        kron(n.id(), co.matrix()) * n.coaction());
}

/// The trivial module k: action ε⊗id, coaction x ↦ x⊗1, index (id,id).
template <ExactField F>
YDQModule<F> trivial_ydq(const BasePtr<F>& base) {
    return YDQModule<F>(gpair_identity(base), 1, base->counit(), base->unit());
}

template <ExactField F>
struct YDMorphism {
    YDQModule<F> src;
    YDQModule<F> dst;
    LinMap<F> matrix;
};

/// H-linearity and H-colinearity of f: src → dst.
template <ExactField F>
Report check_yd_morphism(const YDQModule<F>& src, const YDQModule<F>& dst, const LinMap<F>& f) {
    require_same_base(src.base_ptr(), dst.base_ptr(), "morphism");
    if (f.rows() != dst.dim() || f.cols() != src.dim()) throw DimensionMismatch("morphism shape");
    const auto& b = src.base();
    Report r("yetter-drinfeld morphism");
    r.add("same_index", src.index() == dst.index(),
          src.index() == dst.index() ? std::nullopt : std::optional<Witness>(Witness{{}, {}, {}, "components differ"}));
    r.add(compare_maps("H_linear", f * src.action(), dst.action() * kron(b.id(), f), Dims{b.dim(), src.dim()}, Dims{dst.dim()},
                       b.field()));
    r.add(compare_maps("H_colinear", dst.coaction() * f, kron(f, b.id()) * src.coaction(), Dims{src.dim()},
                       Dims{dst.dim(), b.dim()}, b.field()));
    return r;
}

/// Throws MorphismInvalid when f is not a Yetter-Drinfeld morphism.
template <ExactField F>
YDMorphism<F> make_yd_morphism(const YDQModule<F>& src, const YDQModule<F>& dst, LinMap<F> f) {
    const auto r = check_yd_morphism(src, dst, f);
    for (const auto& c : r.checks())
        if (!c.holds) throw MorphismInvalid("not a Yetter-Drinfeld morphism: " + c.name + " fails");
    return YDMorphism<F>{src, dst, std::move(f)};
}

/// A basis of Hom(src, dst) in the category, as the nullspace of the
/// linearity and colinearity equations.
template <ExactField F>
std::vector<LinMap<F>> morphism_space(const YDQModule<F>& src, const YDQModule<F>& dst) {
    require_same_base(src.base_ptr(), dst.base_ptr(), "morphism_space");
    const auto& b = src.base();
    const std::size_t rows = dst.dim(), cols = src.dim(), unknowns = rows * cols;
    std::vector<std::vector<std::pair<std::size_t, F>>> eqs;
    std::map<std::pair<int, std::size_t>, std::size_t> slot;
    for (std::size_t u = 0; u < unknowns; ++u) {
        const auto e = matrix_unit<F>(rows, cols, u / cols, u % cols, b.one());
        const LinMap<F> lin = e * src.action() - dst.action() * kron(b.id(), e);
        const LinMap<F> colin = dst.coaction() * e - kron(e, b.id()) * src.coaction();
        int tag = 0;
        for (const auto* img : {&lin, &colin}) {
            for (std::size_t j = 0; j < img->cols(); ++j)
                for (const auto& entry : img->column(j)) {
                    const auto key = std::make_pair(tag, j * img->rows() + entry.row);
                    auto [it, fresh] = slot.try_emplace(key, eqs.size());
                    if (fresh) eqs.emplace_back();
                    eqs[it->second].emplace_back(u, entry.value);
                }
            ++tag;
        }
    }
    Matrix<F> a(eqs.size(), unknowns);
    for (std::size_t k = 0; k < eqs.size(); ++k)
        for (const auto& [u, c] : eqs[k]) a(k, u) = c;
    std::vector<LinMap<F>> out;
    const auto ns = nullspace(a, b.one());
    for (std::size_t v = 0; v < ns.cols(); ++v) {
        Matrix<F> x(rows, cols);
        for (std::size_t u = 0; u < unknowns; ++u) x(u / cols, u % cols) = ns(u, v);
        out.push_back(LinMap<F>::from_dense(x));
    }
    return out;
}

/// The first basis element of End(m) that is not a scalar multiple of the
/// identity; the identity itself when no such element exists.
template <ExactField F>
YDMorphism<F> nontrivial_endomorphism(const YDQModule<F>& m) {
    for (auto& f : morphism_space(m, m)) {
        const F c = f.to_dense()(0, 0);
        if (is_zero(c) || !(f == c * m.id())) return YDMorphism<F>{m, m, std::move(f)};
    }
    return YDMorphism<F>{m, m, m.id()};
}

}  // namespace hqg

#endif
