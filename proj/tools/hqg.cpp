// hqg: batch front end. Exit codes: 0 every verdict holds (or a construction
// succeeded), 1 a checked property fails, 2 input or precondition error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hqg/errors.hpp"
#include "hqg/hopf/axioms.hpp"
#include "hqg/hopf/equivalence.hpp"
#include "hqg/hopf/galois.hpp"
#include "hqg/hopf/io.hpp"
#include "hqg/loop/cayley.hpp"
#include "hqg/ydq/braiding.hpp"
#include "hqg/ydq/io.hpp"

namespace fs = std::filesystem;
using namespace hqg;

namespace {

constexpr int exit_pass = 0, exit_fail = 1, exit_error = 2;

struct Args {
    bool json = false;
    std::string field = "q";

    std::string input, input2, output;
    std::vector<std::string> identities, galois_sides, modules, conjugators;
    std::string strategy = "automatic";
    std::string builtin;
    unsigned levels = 1;
    bool no_antipode = false;
    std::string which = "T1", condition, mode, antipode_file, theorem, form = "eq51";
    bool lr = false;
    std::string coalgebra, algebra, expect;
    std::string base, kind = "hab", alpha = "id", beta = "id", pair, base_ref;
    bool inline_base = false;
    std::string p_module, step = "all", nat_f, nat_g;
    bool identity_morphisms = false;
};

int print_report(const Args& a, const Report& r) {
    std::string text = a.json ? dump_rows(r.to_json()) : r.to_text();
    if (!text.empty() && text.back() != '\n') text += '\n';
    std::cout << text;
    return r.all_hold() ? exit_pass : exit_fail;
}

/// Writes `text` to the output path, or to stdout when none is given.
int emit_artifact(const Args& a, const std::string& text, const Report& summary) {
    if (a.output.empty()) {
        std::cout << text;
        return exit_pass;
    }
    write_text_file(a.output, text);
    return print_report(a, summary);
}

CayleyTable load_table(const std::string& path) { return read_cayley_file(path); }

template <ExactField F>
Bialgebra<F> load_bialgebra(const std::string& path, const Field<F>& field) {
    return parse_bialgebra(read_text_file(path), field);
}

template <ExactField F>
LinMap<F> load_matrix(const std::string& path, const Field<F>& field) {
    return parse_matrix(read_text_file(path), field);
}

/// Shares one bialgebra object per resolved file so modules built from the
/// same base compare cheaply.
template <ExactField F>
class BaseCache {
   public:
    explicit BaseCache(Field<F> field) : field_(std::move(field)) {}

    BasePtr<F> load(const std::string& path) {
        std::error_code ec;
        const auto canon = fs::weakly_canonical(path, ec).string();
        const auto key = ec ? path : canon;
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto ptr = std::make_shared<const Bialgebra<F>>(load_bialgebra(path, field_));
        cache_.emplace(key, ptr);
        return ptr;
    }

    /// Named bases resolve relative to the module file, or to `override_path`.
    YDQModule<F> module(const std::string& path, const std::string& override_path = "") {
        const auto dir = fs::path(path).parent_path();
        BaseResolver<F> resolve = [&](const std::string& name) {
            if (!override_path.empty()) return load(override_path);
            return load((dir / name).string());
        };
        return parse_ydq(read_text_file(path), field_, resolve);
    }

   private:
    Field<F> field_;
    std::map<std::string, BasePtr<F>> cache_;
};

/// "id", "perm:i0,i1,..." (basis permutation) or a matrix file.
template <ExactField F>
HqgAutomorphism<F> automorphism_spec(const std::string& spec, const BasePtr<F>& base) {
    if (spec == "id") return HqgAutomorphism<F>::identity(base);
    if (spec.rfind("perm:", 0) == 0) {
        Permutation p;
        std::stringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                const auto v = std::stoul(item, &used);
                if (used != item.size()) throw FormatError("");
                p.push_back(static_cast<Element>(v));
            } catch (const std::exception&) {
                throw FormatError("bad permutation entry '" + item + "'");
            }
        }
        if (p.size() != base->dim()) throw DimensionMismatch("permutation length differs from the base dimension");
        std::vector<bool> seen(p.size());
        for (auto x : p) {
            if (x >= p.size() || seen[x]) throw FormatError("'" + spec + "' is not a permutation");
            seen[x] = true;
        }
        return make_automorphism(base, permutation_matrix(p, base->one()));
    }
    return make_automorphism(base, load_matrix(spec, base->field()));
}

// ---- loop verbs -----------------------------------------------------------

int cmd_check_loop(const Args& a) {
    const auto t = load_table(a.input);
    Report r = check_quasigroup(t).to_report();
    for (const auto& name : a.identities) {
        const auto id = parse_loop_identity(name);
        const auto v = check_loop_identity(t, id);
        std::optional<Witness> w;
        if (!v.holds) w = Witness{{v.witness.begin(), v.witness.end()}, {}, {}, "first failing tuple"};
        r.add(std::string(to_string(id)), v.holds, w);
    }
    for (const auto& side : a.galois_sides) {
        const auto s = parse_galois_side(side);
        r.add(std::string(to_string(s)) + "_bijective", set_galois_bijective(t, s));
    }
    r.note("order", t.order());
    return print_report(a, r);
}

AutomorphismSearch parse_strategy(const std::string& s) {
    if (s == "automatic") return AutomorphismSearch::automatic;
    if (s == "exhaustive") return AutomorphismSearch::exhaustive;
    return AutomorphismSearch::backtracking;
}

int cmd_autos(const Args& a) {
    const auto t = load_table(a.input);
    const auto autos = loop_automorphisms(t, parse_strategy(a.strategy));
    Report r("automorphisms");
    const auto member = [&](const Permutation& p) { return std::binary_search(autos.begin(), autos.end(), p); };
    std::optional<Witness> comp_w, inv_w;
    for (std::size_t i = 0; i < autos.size() && !comp_w; ++i)
        for (std::size_t j = 0; j < autos.size() && !comp_w; ++j)
            if (!member(compose(autos[i], autos[j]))) comp_w = Witness{{i, j}, {}, {}, "composite missing"};
    for (std::size_t i = 0; i < autos.size() && !inv_w; ++i)
        if (!member(inverse(autos[i]))) inv_w = Witness{{i}, {}, {}, "inverse missing"};
    r.add("closed_under_composition", !comp_w, comp_w);
    r.add("closed_under_inverse", !inv_w, inv_w);
    r.note("count", autos.size());
    r.note("automorphisms", autos);
    return print_report(a, r);
}

int cmd_chein(const Args& a) {
    if (a.input.empty() == a.builtin.empty()) throw FormatError("give exactly one of a table file or --builtin");
    auto t = a.builtin.empty() ? load_table(a.input) : builtin_table(a.builtin);
    for (unsigned k = 0; k < a.levels; ++k) t = chein_double(t);
    Report r("chein");
    r.note("order", t.order());
    return emit_artifact(a, emit_cayley(t), r);
}

// ---- hopf verbs -----------------------------------------------------------

template <ExactField F>
int cmd_loop_algebra(const Args& a, const Field<F>& field) {
    const auto t = load_table(a.input);
    const auto b = a.no_antipode ? loop_algebra_unchecked(t, field).renamed(t.name().empty() ? "k[monoid]" : "k[" + t.name() + "]")
                                 : loop_algebra(t, field);
    Report r("loop-algebra");
    r.note("dim", b.dim());
    return emit_artifact(a, emit_bialgebra(b), r);
}

template <ExactField F>
int cmd_dualize(const Args& a, const Field<F>& field) {
    const auto b = dualize(load_bialgebra(a.input, field));
    Report r("dualize");
    r.note("dim", b.dim());
    return emit_artifact(a, emit_bialgebra(b), r);
}

template <ExactField F>
int cmd_check_bialgebra(const Args& a, const Field<F>& field) {
    return print_report(a, check_bialgebra(load_bialgebra(a.input, field)));
}

template <ExactField F>
int cmd_galois(const Args& a, const Field<F>& field) {
    const auto b = load_bialgebra(a.input, field);
    const auto side = parse_galois_side(a.which);
    const auto g = invert_galois(b, side);
    Report r = g.to_report();
    if (!a.condition.empty()) r.append(check_galois_compat(b, side, parse_galois_condition(a.condition)));
    if (!a.output.empty()) {
        if (!g.inverse) throw NotBijective(std::string(to_string(side)) + " is not bijective; no inverse to write");
        write_text_file(a.output, emit_matrix(*g.inverse, field));
    }
    return print_report(a, r);
}

template <ExactField F>
int cmd_antipode(const Args& a, const Field<F>& field) {
    const auto b = load_bialgebra(a.input, field);
    Report r("antipode");
    std::optional<LinMap<F>> s;
    if (a.which == "both") {
        const auto s1 = antipode_extract(b, GaloisSide::T1);
        const auto s2 = antipode_extract(b, GaloisSide::T2);
        r.add(compare_maps("T1_T2_agree", s1, s2, Dims{b.dim()}, Dims{b.dim()}, field));
        s = s1;
    } else {
        s = antipode_extract(b, parse_galois_side(a.which));
    }
    if (b.antipode())
        r.add(compare_maps("matches_stored", *s, *b.antipode(), Dims{b.dim()}, Dims{b.dim()}, field));
    r.note("antipode", matrix_to_json(*s, field));
    if (!a.output.empty()) write_text_file(a.output, emit_matrix(*s, field));
    return print_report(a, r);
}

template <ExactField F>
int cmd_check_hopf(const Args& a, const Field<F>& field) {
    const auto b = load_bialgebra(a.input, field);
    const auto mode = parse_antipode_mode(a.mode);
    const LinMap<F> s = a.antipode_file.empty() ? b.require_antipode() : load_matrix(a.antipode_file, field);
    Report r = check_antipode_axioms(b, s, mode);
    const auto variant = mode == AntipodeMode::coquasigroup ? HqgVariant::coquasigroup : HqgVariant::quasigroup;
    for (const auto& name : a.identities) r.append(check_hqg_identity(b, parse_hqg_identity(name), variant));
    if (a.lr) r.append(lr_convolution_invertible(b));
    return print_report(a, r);
}

template <ExactField F>
LinMap<F> convolve_operand(const std::string& spec, const Bialgebra<F>& c, const Bialgebra<F>& alg) {
    if (spec == "id") {
        if (c.dim() != alg.dim()) throw DimensionMismatch("'id' needs equal dimensions");
        return c.id();
    }
    if (spec == "antipode") {
        if (c.dim() != alg.dim()) throw DimensionMismatch("'antipode' needs equal dimensions");
        return c.require_antipode();
    }
    if (spec == "unit") return convolution_unit(c, alg);
    return load_matrix(spec, c.field());
}

template <ExactField F>
int cmd_convolve(const Args& a, const Field<F>& field) {
    const auto c = load_bialgebra(a.coalgebra, field);
    const auto alg = a.algebra.empty() ? c : load_bialgebra(a.algebra, field);
    const auto f = convolve_operand(a.input, c, alg), g = convolve_operand(a.input2, c, alg);
    const auto h = convolve(f, g, c, alg);
    Report r("convolve");
    if (!a.expect.empty()) {
        const auto e = convolve_operand(a.expect, c, alg);
        if (e.rows() != h.rows() || e.cols() != h.cols()) throw DimensionMismatch("expected map has the wrong shape");
        r.add(compare_maps("equals_expected", h, e, Dims{c.dim()}, Dims{alg.dim()}, field));
    }
    r.note("result", matrix_to_json(h, field));
    if (!a.output.empty()) write_text_file(a.output, emit_matrix(h, field));
    return print_report(a, r);
}

template <ExactField F>
int cmd_equiv(const Args& a, const Field<F>& field) {
    return print_report(a, equivalence_report(load_bialgebra(a.input, field), parse_theorem(a.theorem)));
}

// ---- ydq verbs ------------------------------------------------------------

template <ExactField F>
int cmd_ydq_build(const Args& a, const Field<F>& field) {
    BaseCache<F> cache(field);
    std::optional<YDQModule<F>> m;
    const auto load_pair = [&](const BasePtr<F>& base) {
        if (!a.pair.empty()) return parse_gpair(read_text_file(a.pair), base);
        return make_gpair(automorphism_spec(a.alpha, base), automorphism_spec(a.beta, base));
    };
    std::string base_path = a.base;
    if (a.kind == "hab" || a.kind == "trivial") {
        if (a.base.empty()) throw FormatError("--base is required for kind '" + a.kind + "'");
        const auto base = cache.load(a.base);
        m = a.kind == "hab" ? build_H_alpha_beta(load_pair(base)) : trivial_ydq(base);
    } else if (a.kind == "tensor") {
        if (a.modules.size() < 2) throw FormatError("kind 'tensor' needs at least two --module files");
        m = cache.module(a.modules[0], a.base);
        for (std::size_t k = 1; k < a.modules.size(); ++k) m = tensor_ydq(*m, cache.module(a.modules[k], a.base));
    } else if (a.kind == "conjugate") {
        if (a.modules.size() != 1) throw FormatError("kind 'conjugate' needs exactly one --module file");
        const auto n = cache.module(a.modules[0], a.base);
        m = conjugate_ydq(load_pair(n.base_ptr()), n);
    } else {
        throw FormatError("unknown module kind '" + a.kind + "'");
    }
    // a named base is written relative to the output file
    std::string ref;
    if (!a.inline_base && !a.output.empty()) {
        if (!a.base_ref.empty())
            ref = a.base_ref;
        else if (!base_path.empty())
            ref = fs::relative(fs::absolute(base_path), fs::absolute(a.output).parent_path()).generic_string();
    }
    Report r("ydq-build");
    r.note("dim", m->dim());
    return emit_artifact(a, emit_ydq(*m, ref), r);
}

template <ExactField F>
int cmd_ydq_check(const Args& a, const Field<F>& field) {
    BaseCache<F> cache(field);
    const auto m = cache.module(a.input, a.base);
    return print_report(a, check_ydq(m, parse_ydq_form(a.form)));
}

template <ExactField F>
int cmd_braid(const Args& a, const Field<F>& field) {
    BaseCache<F> cache(field);
    const auto m = cache.module(a.input, a.base);
    const auto n = cache.module(a.input2, a.base);
    const auto p = a.p_module.empty() ? m : cache.module(a.p_module, a.base);
    std::vector<BraidStep> steps;
    if (a.step == "all")
        steps.assign(std::begin(all_braid_steps), std::end(all_braid_steps));
    else
        steps.push_back(parse_braid_step(a.step));
    Report r("braid");
    for (auto s : steps) {
        std::optional<NaturalityPair<F>> pair;
        if (s == BraidStep::naturality && !a.identity_morphisms) {
            // explicit endomorphism matrices, else a nontrivial one from End(M), End(N)
            auto f = a.nat_f.empty() ? nontrivial_endomorphism(m) : YDMorphism<F>{m, m, load_matrix(a.nat_f, field)};
            auto g = a.nat_g.empty() ? nontrivial_endomorphism(n) : YDMorphism<F>{n, n, load_matrix(a.nat_g, field)};
            pair = NaturalityPair<F>{std::move(f), std::move(g)};
        }
        r.append(check_braiding_axioms(m, n, p, s, pair), std::string(to_string(s)) + ".");
    }
    if (!a.output.empty()) write_text_file(a.output, emit_matrix(braiding(m, n, BraidDirection::forward), field));
    return print_report(a, r);
}

template <ExactField F>
int cmd_crossed_check(const Args& a, const Field<F>& field) {
    BaseCache<F> cache(field);
    if (a.modules.empty()) throw FormatError("crossed-check needs at least one module");
    std::vector<YDQModule<F>> fixtures;
    for (const auto& path : a.modules) fixtures.push_back(cache.module(path, a.base));
    std::vector<GPair<F>> extra;
    for (const auto& path : a.conjugators) extra.push_back(parse_gpair(read_text_file(path), fixtures.front().base_ptr()));
    return print_report(a, check_crossed_structure(fixtures, extra));
}

template <ExactField F>
int dispatch(const std::string& verb, const Args& a, const Field<F>& field) {
    if (verb == "check-loop") return cmd_check_loop(a);
    if (verb == "autos") return cmd_autos(a);
    if (verb == "chein") return cmd_chein(a);
    if (verb == "loop-algebra") return cmd_loop_algebra(a, field);
    if (verb == "dualize") return cmd_dualize(a, field);
    if (verb == "check-bialgebra") return cmd_check_bialgebra(a, field);
    if (verb == "galois") return cmd_galois(a, field);
    if (verb == "antipode") return cmd_antipode(a, field);
    if (verb == "check-hopf") return cmd_check_hopf(a, field);
    if (verb == "convolve") return cmd_convolve(a, field);
    if (verb == "equiv") return cmd_equiv(a, field);
    if (verb == "ydq-build") return cmd_ydq_build(a, field);
    if (verb == "ydq-check") return cmd_ydq_check(a, field);
    if (verb == "braid") return cmd_braid(a, field);
    if (verb == "crossed-check") return cmd_crossed_check(a, field);
    throw FormatError("unknown verb '" + verb + "'");
}

std::string error_kind(const Error& e) {
#define HQG_KIND(Name) \
    if (dynamic_cast<const Name*>(&e)) return #Name
    HQG_KIND(DivisionByZero);
    HQG_KIND(FieldMismatch);
    HQG_KIND(DimensionMismatch);
    HQG_KIND(NotInvertible);
    HQG_KIND(FormatError);
    HQG_KIND(NoIdentity);
    HQG_KIND(IndexOutOfRange);
    HQG_KIND(NotALoop);
    HQG_KIND(NotAGroup);
    HQG_KIND(NotIPLoop);
    HQG_KIND(NotBijective);
    HQG_KIND(NoAntipodeExtractable);
    HQG_KIND(PreconditionViolated);
    HQG_KIND(BaseMismatch);
    HQG_KIND(MorphismInvalid);
    HQG_KIND(IOError);
#undef HQG_KIND
    return "Error";
}

}  // namespace

int main(int argc, char** argv) {
    Args a;
    CLI::App app{"Exact checkers for Hopf quasigroups and Yetter-Drinfeld quasimodules"};
    app.require_subcommand(1);
    app.add_flag("--json", a.json, "Emit the machine-readable report");
    app.add_option("--field", a.field, "Scalar field: q or fp:<prime>")->capture_default_str();
    app.fallthrough();

    const auto strategies = CLI::IsMember({"automatic", "exhaustive", "backtracking"});
    const auto sides = CLI::IsMember({"T1", "T2"});

    auto* check_loop = app.add_subcommand("check-loop", "Latin, identity and IP properties of a Cayley table");
    check_loop->add_option("table", a.input, "Cayley table file")->required();
    check_loop->add_option("--identity", a.identities, "Loop identity to check (repeatable)")
        ->check(CLI::IsMember({"flexible", "alternative", "moufang", "associative"}));
    check_loop->add_option("--galois", a.galois_sides, "Set-level Galois map to test for bijectivity (repeatable)")
        ->check(sides);

    auto* autos = app.add_subcommand("autos", "Enumerate loop automorphisms");
    autos->add_option("table", a.input, "Cayley table file")->required();
    autos->add_option("--strategy", a.strategy, "Search strategy")->check(strategies)->capture_default_str();

    auto* chein = app.add_subcommand("chein", "Chein double of a group table");
    chein->add_option("table", a.input, "Group table file");
    chein->add_option("--builtin", a.builtin, "Named table: c<n>, s<k> or idempotent");
    chein->add_option("--levels", a.levels, "Number of doublings (0 emits the input)")->capture_default_str();
    chein->add_option("-o,--output", a.output, "Output file (default stdout)");

    auto* loop_alg = app.add_subcommand("loop-algebra", "Loop algebra of an IP loop table");
    loop_alg->add_option("table", a.input, "Cayley table file")->required();
    loop_alg->add_flag("--no-antipode", a.no_antipode, "Accept any table with identity; store no antipode");
    loop_alg->add_option("-o,--output", a.output, "Output file (default stdout)");

    auto* dual = app.add_subcommand("dualize", "Dual bialgebra");
    dual->add_option("bialgebra", a.input, "Bialgebra file")->required();
    dual->add_option("-o,--output", a.output, "Output file (default stdout)");

    auto* check_bi = app.add_subcommand("check-bialgebra", "Bialgebra axioms, associativity, coassociativity");
    check_bi->add_option("bialgebra", a.input, "Bialgebra file")->required();

    auto* galois = app.add_subcommand("galois", "Invert a Galois map and check its compatibilities");
    galois->add_option("bialgebra", a.input, "Bialgebra file")->required();
    galois->add_option("--which", a.which, "Galois map")->check(sides)->capture_default_str();
    galois->add_option("--condition", a.condition, "Compatibility condition on the inverse")
        ->check(CLI::IsMember({"thm31_module_comodule", "def41_42_compat"}));
    galois->add_option("-o,--output", a.output, "Write the inverse matrix here");

    auto* antipode = app.add_subcommand("antipode", "Extract the antipode from a Galois map");
    antipode->add_option("bialgebra", a.input, "Bialgebra file")->required();
    antipode->add_option("--which", a.which, "T1, T2 or both")
        ->check(CLI::IsMember({"T1", "T2", "both"}))
        ->capture_default_str();
    antipode->add_option("-o,--output", a.output, "Write the antipode matrix here");

    auto* check_hopf = app.add_subcommand("check-hopf", "Antipode axioms and Hopf quasigroup identities");
    check_hopf->add_option("bialgebra", a.input, "Bialgebra file")->required();
    check_hopf->add_option("--mode", a.mode, "Setting")
        ->required()
        ->check(CLI::IsMember({"hopf", "quasigroup", "coquasigroup"}));
    check_hopf->add_option("--antipode", a.antipode_file, "Candidate antipode matrix (default: stored)");
    check_hopf->add_option("--identity", a.identities, "flexible or moufang (repeatable)")
        ->check(CLI::IsMember({"flexible", "moufang"}));
    check_hopf->add_flag("--lr", a.lr, "Also check convolution invertibility of L and R");

    auto* conv = app.add_subcommand("convolve", "Convolution product of two maps C -> A");
    conv->add_option("f", a.input, "id, antipode, unit or a matrix file")->required();
    conv->add_option("g", a.input2, "id, antipode, unit or a matrix file")->required();
    conv->add_option("--coalgebra", a.coalgebra, "Bialgebra supplying the coproduct")->required();
    conv->add_option("--algebra", a.algebra, "Bialgebra supplying the product (default: the coalgebra)");
    conv->add_option("--expect", a.expect, "Compare the result with id, antipode, unit or a matrix file");
    conv->add_option("-o,--output", a.output, "Write the result matrix here");

    auto* equiv = app.add_subcommand("equiv", "Evaluate every condition of an equivalence theorem");
    equiv->add_option("bialgebra", a.input, "Bialgebra file")->required();
    equiv->add_option("--theorem", a.theorem, "t31 or t43")->required()->check(CLI::IsMember({"t31", "t43"}));

    const auto add_base = [&](CLI::App* sub) {
        sub->add_option("--base", a.base, "Bialgebra file (overrides a module's named base)");
    };

    auto* build = app.add_subcommand("ydq-build", "Construct a Yetter-Drinfeld quasimodule");
    build->add_option("--kind", a.kind, "hab, trivial, tensor or conjugate")
        ->check(CLI::IsMember({"hab", "trivial", "tensor", "conjugate"}))
        ->capture_default_str();
    add_base(build);
    build->add_option("--alpha", a.alpha, "id, perm:i0,i1,... or a matrix file")->capture_default_str();
    build->add_option("--beta", a.beta, "id, perm:i0,i1,... or a matrix file")->capture_default_str();
    build->add_option("--pair", a.pair, "Automorphism pair file (overrides --alpha/--beta)");
    build->add_option("--module", a.modules, "Input module file (tensor: two or more; conjugate: one)");
    build->add_option("--base-ref", a.base_ref, "Name to record for the base instead of its relative path");
    build->add_flag("--inline-base", a.inline_base, "Embed the base in the module file");
    build->add_option("-o,--output", a.output, "Output file (default stdout, base inline)");

    auto* ycheck = app.add_subcommand("ydq-check", "Quasimodule, comodule and compatibility laws");
    ycheck->add_option("module", a.input, "Module file")->required();
    ycheck->add_option("--form", a.form, "Compatibility form")
        ->check(CLI::IsMember({"eq51", "eq52"}))
        ->capture_default_str();
    add_base(ycheck);

    auto* braid = app.add_subcommand("braid", "Braiding identities for a pair of modules");
    braid->add_option("m", a.input, "Module M")->required();
    braid->add_option("n", a.input2, "Module N")->required();
    braid->add_option("--p", a.p_module, "Third module for the hexagons (default M)");
    braid->add_option("--step", a.step, "all or one step")
        ->check(CLI::IsMember({"all", "module_map", "comodule_map", "hexagon1", "hexagon2", "naturality", "bijective"}))
        ->capture_default_str();
    braid->add_option("--naturality-f", a.nat_f, "Endomorphism matrix of M for the naturality square");
    braid->add_option("--naturality-g", a.nat_g, "Endomorphism matrix of N for the naturality square");
    braid->add_flag("--identity-morphisms", a.identity_morphisms, "Use identities in the naturality square");
    braid->add_option("-o,--output", a.output, "Write the braiding matrix here");
    add_base(braid);

    auto* crossed = app.add_subcommand("crossed-check", "Crossed-structure identities over a set of modules");
    crossed->add_option("modules", a.modules, "Module files")->required();
    crossed->add_option("--conjugator", a.conjugators, "Extra automorphism pair file (repeatable)");
    add_base(crossed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }
    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        if (a.field == "q") return dispatch(verb, a, RationalField{});
        if (a.field.rfind("fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                std::size_t used = 0;
                p = std::stoull(a.field.substr(3), &used);
                if (used + 3 != a.field.size()) p = 0;
            } catch (const std::exception&) {
                p = 0;
            }
            if (!is_prime(p)) throw FormatError("field modulus in '" + a.field + "' is not a prime");
            return dispatch(verb, a, PrimeField(p));
        }
        throw FormatError("unknown field '" + a.field + "'; expected q or fp:<prime>");
    } catch (const Error& e) {
        std::cerr << "hqg " << verb << ": " << error_kind(e) << ": " << e.what() << '\n';
        if (a.json) {
            nlohmann::ordered_json j;
            j["error"] = error_kind(e);
            j["message"] = e.what();
            std::cout << dump_rows(j);
        }
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "hqg " << verb << ": " << e.what() << '\n';
        return exit_error;
    }
}
