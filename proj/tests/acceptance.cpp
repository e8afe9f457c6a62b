// Acceptance run: one [PASS]/[FAIL] line per criterion, [info] lines for
// controls. The exit status is 0 when every criterion was evaluated to a
// verdict, whatever the verdicts are; 1 when evaluation itself broke.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hqg/hopf/axioms.hpp"
#include "hqg/hopf/equivalence.hpp"
#include "hqg/hopf/galois.hpp"
#include "hqg/hopf/io.hpp"
#include "hqg/ydq/braiding.hpp"
#include "hqg/ydq/io.hpp"

using namespace hqg;
using Q = Rational;
namespace fs = std::filesystem;

namespace {

const RationalField QQ;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;
    std::vector<std::string> info;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "" : "NOT ") + what);
    }
};

int broken = 0;
int met = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.details.push_back(std::string("evaluation error: ") + e.what());
        ++broken;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < budget_s;
    const bool pass = o.pass && in_time;
    met += pass;
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << " (" << std::fixed;
    line.precision(3);
    line << secs << " s of " << budget_s << " s" << (in_time ? "" : ", OVER BUDGET") << ")";
    std::cout << line.str() << '\n';
    for (const auto& d : o.details) std::cout << "         " << d << '\n';
    for (const auto& i : o.info) std::cout << "[info]   " << i << '\n';
    std::cout.flush();
}

BasePtr<Q> algebra_of(const CayleyTable& t) { return std::make_shared<const Bialgebra<Q>>(loop_algebra(t, QQ)); }

std::vector<Element> table_inverses(const CayleyTable& t) {
    std::vector<Element> inv(t.order());
    for (Element x = 0; x < t.order(); ++x)
        for (Element y = 0; y < t.order(); ++y)
            if (t(x, y) == 0 && t(y, x) == 0) inv[x] = y;
    return inv;
}

std::vector<HqgAutomorphism<Q>> automorphisms_of(const CayleyTable& t, const BasePtr<Q>& base) {
    std::vector<HqgAutomorphism<Q>> out;
    for (const auto& p : loop_automorphisms(t)) out.push_back(make_automorphism(base, permutation_matrix(p, QQ.one())));
    return out;
}

std::size_t count_true(const Report& r, bool value, std::string_view prefix) {
    std::size_t n = 0;
    for (const auto& c : r.checks())
        if (c.name.rfind(prefix, 0) == 0 && c.holds == value) ++n;
    return n;
}

// ---- criterion 1 ----------------------------------------------------------

void group_algebra_s3(Outcome& o) {
    const auto t = fixtures::s3_table();
    const auto b = loop_algebra(t, QQ);
    const auto eq = equivalence_report(b, Theorem::t31);
    o.require(count_true(eq, true, "(") == 6 && eq.checks().size() == 7, "t31 gives six trues");

    const auto inv = table_inverses(t);
    const auto oracle = LinMap<Q>::from_basis_map(t.order(), std::vector<std::size_t>(inv.begin(), inv.end()), QQ.one());
    const auto s1 = antipode_extract(b, GaloisSide::T1), s2 = antipode_extract(b, GaloisSide::T2);
    o.require(s1 == oracle && s2 == oracle, "antipode_extract(T1) = antipode_extract(T2) = inversion permutation");

    // T1^-1(g⊗h) = g⊗g^-1h and T2^-1(g⊗h) = gh^-1⊗h, read off the table
    const std::size_t n = t.order();
    std::vector<std::size_t> t1(n * n), t2(n * n);
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) {
            t1[g * n + h] = g * n + t(inv[g], h);
            t2[g * n + h] = t(g, inv[h]) * n + h;
        }
    bool ok = true;
    for (auto side : {GaloisSide::T1, GaloisSide::T2}) {
        const auto g = invert_galois(b, side);
        const auto expect = LinMap<Q>::from_basis_map(n * n, side == GaloisSide::T1 ? t1 : t2, QQ.one());
        ok = ok && g.bijective && g.formula_inverse_matches.value_or(false) && *g.inverse == expect;
    }
    o.require(ok, "Galois inverses equal the closed forms entrywise (and the table oracle)");
}

// ---- criterion 2 ----------------------------------------------------------

void chein_m12(Outcome& o) {
    const auto t = chein_double(fixtures::s3_table());
    o.require(t == fixtures::m12_table(), "chein(S3) equals the doubling written out from its rules");
    const auto b = loop_algebra(t, QQ);
    o.require(check_antipode_axioms(b, *b.antipode(), AntipodeMode::quasigroup).all_hold(), "quasigroup antipode axioms pass");
    const auto bi = check_bialgebra(b);
    const auto* assoc = bi.find("associative");
    o.require(assoc && !assoc->holds && assoc->witness, "associativity fails with a witness");
    const auto eq = equivalence_report(b, Theorem::t43);
    o.require(count_true(eq, true, "(") == 3 && eq.checks().size() == 4, "t43 gives three trues");
    o.require(check_galois_compat(b, GaloisSide::T1, GaloisCondition::def41_42_compat).all_hold() &&
                  check_galois_compat(b, GaloisSide::T2, GaloisCondition::def41_42_compat).all_hold(),
              "def41_42 passes for T1 and T2");
    const auto thm = check_galois_compat(b, GaloisSide::T1, GaloisCondition::thm31_module_comodule);
    const auto* rm = thm.find("right_module_map");
    bool witness_ok = false;
    if (rm && !rm->holds && rm->witness && rm->witness->input.size() == 3) {
        // the witness triple itself breaks S(a)(bc) = (S(a)b)c
        const auto& w = rm->witness->input;
        const auto inv = table_inverses(t);
        const Element a = static_cast<Element>(w[0]), x = static_cast<Element>(w[1]), c = static_cast<Element>(w[2]);
        witness_ok = t(inv[a], t(x, c)) != t(t(inv[a], x), c);
    }
    o.require(rm && !rm->holds && witness_ok, "right-module-map condition on T1^-1 fails with a table-confirmed witness");
}

// ---- criterion 3 ----------------------------------------------------------

void idempotent_monoid_case(Outcome& o) {
    const auto b = idempotent_monoid(QQ);
    const auto eq = equivalence_report(b, Theorem::t31);
    o.require(count_true(eq, false, "(") == 6 && eq.holds("conditions_agree"), "t31 gives six falses");
}

// ---- criterion 4 ----------------------------------------------------------

void dual_m12(Outcome& o) {
    const auto b = dualize(loop_algebra(fixtures::m12_table(), QQ));
    o.require(check_antipode_axioms(b, *b.antipode(), AntipodeMode::coquasigroup).all_hold(), "coquasigroup axioms pass");
    o.require(check_hqg_identity(b, HqgIdentity::moufang, HqgVariant::coquasigroup).all_hold(),
              "coquasigroup Moufang passes");
    const auto bi = check_bialgebra(b);
    o.require(!bi.holds("coassociative") && bi.holds("associative"), "coassociativity fails while associativity passes");
}

// ---- criterion 5 ----------------------------------------------------------

struct SmallStats {
    std::size_t tables = 0, loops = 0, ip_loops = 0;
    std::size_t chain_breaks_loops = 0;       // latin, T1, T2 not all equal on a loop
    std::size_t conj_breaks = 0;              // latin != (T1 and T2)
    std::size_t single_side_breaks = 0;       // latin != T1 on a magma
    std::size_t ip_breaks = 0;                // (ip and latin) != S-equations solvable
    std::size_t inverse_breaks = 0;           // returned inverse fails the S-equations
    std::string single_side_example;
};

void small_tables(Outcome& o) {
    SmallStats s;
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t free = (n - 1) * (n - 1);
        std::size_t total = 1;
        for (std::size_t k = 0; k < free; ++k) total *= n;
        std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
        for (Element i = 0; i < n; ++i) rows[0][i] = rows[i][0] = i;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t j = 1; j < n; ++j) {
                    rows[i][j] = static_cast<Element>(c % n);
                    c /= n;
                }
            ++s.tables;
            // direct oracles
            bool rows_perm = true, cols_perm = true;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<bool> r(n), cl(n);
                for (std::size_t j = 0; j < n; ++j) {
                    r[rows[i][j]] = true;
                    cl[rows[j][i]] = true;
                }
                for (std::size_t j = 0; j < n; ++j) rows_perm = rows_perm && r[j], cols_perm = cols_perm && cl[j];
            }
            const bool latin = rows_perm && cols_perm;
            // S with S(g)(gh) = h = (hg)S(g), solved independently for each g
            bool s_exists = true;
            for (std::size_t g = 0; g < n && s_exists; ++g) {
                bool found = false;
                for (std::size_t cand = 0; cand < n && !found; ++cand) {
                    bool ok = true;
                    for (std::size_t h = 0; h < n && ok; ++h)
                        ok = rows[cand][rows[g][h]] == h && rows[rows[h][g]][cand] == h;
                    found = ok;
                }
                s_exists = found;
            }

            const auto t = CayleyTable::from_rows(rows);
            const auto q = check_quasigroup(t);
            const bool t1 = set_galois_bijective(t, GaloisSide::T1), t2 = set_galois_bijective(t, GaloisSide::T2);
            if (q.latin != latin) ++s.conj_breaks;
            if (latin != (t1 && t2)) ++s.conj_breaks;
            if (latin != t1 || latin != t2) {
                if (!s.single_side_breaks) {
                    std::ostringstream ex;
                    ex << "order " << n << " rows";
                    for (const auto& r : rows) {
                        ex << " [";
                        for (std::size_t j = 0; j < n; ++j) ex << (j ? " " : "") << r[j];
                        ex << "]";
                    }
                    ex << ": latin=" << latin << " T1=" << t1 << " T2=" << t2;
                    s.single_side_example = ex.str();
                }
                ++s.single_side_breaks;
            }
            if (latin) {
                ++s.loops;
                if (!(t1 && t2)) ++s.chain_breaks_loops;
            }
            if ((q.ip && q.latin) != s_exists) ++s.ip_breaks;
            if (q.ip && q.latin) {
                ++s.ip_loops;
                const auto& inv = *q.inverse;
                for (Element g = 0; g < n; ++g)
                    for (Element h = 0; h < n; ++h)
                        if (t(inv[g], t(g, h)) != h || t(t(h, g), inv[g]) != h) ++s.inverse_breaks;
            }
        }
    }
    o.require(s.chain_breaks_loops == 0, "latin <=> T1-bijective <=> T2-bijective on all " + std::to_string(s.loops) +
                                             " loops of order <= 4");
    o.require(s.conj_breaks == 0, "latin <=> (T1 and T2 bijective) on all " + std::to_string(s.tables) +
                                      " tables with identity of order <= 4");
    o.require(s.ip_breaks == 0 && s.inverse_breaks == 0,
              "ip <=> two-sided S-equations solvable (" + std::to_string(s.ip_loops) +
                  " IP loops), returned inverse satisfies both equations");
    o.info.push_back("tables with identity where latin differs from a single side: " +
                     std::to_string(s.single_side_breaks) + " (first: " + s.single_side_example + ")");
}

// ---- criterion 6 ----------------------------------------------------------

void ydq_forms(Outcome& o) {
    const auto t = fixtures::m12_table();
    const auto base = algebra_of(t);
    const auto autos = automorphisms_of(t, base);
    const auto id = HqgAutomorphism<Q>::identity(base);
    std::size_t full51 = 0, full52 = 0, compat51 = 0, compat52 = 0, quasi = 0;
    std::vector<YDQModule<Q>> modules;
    for (const auto& beta : autos) {
        const auto m = build_H_alpha_beta(make_gpair(id, beta));
        const auto r51 = check_ydq(m, YdqForm::eq51), r52 = check_ydq(m, YdqForm::eq52);
        full51 += r51.all_hold();
        full52 += r52.all_hold();
        compat51 += r51.holds("eq51");
        compat52 += r52.holds("eq52");
        quasi += r51.holds("a1(S(a2)x)=e(a)x") && r51.holds("S(a1)(a2x)=e(a)x");
        modules.push_back(m);
    }
    const auto k = autos.size();
    o.require(full51 == k && full52 == k, "check_ydq passes for every beta: eq51 " + std::to_string(full51) + "/" +
                                              std::to_string(k) + ", eq52 " + std::to_string(full52) + "/" +
                                              std::to_string(k));
    o.info.push_back("compatibility flag alone: eq51 " + std::to_string(compat51) + "/" + std::to_string(k) + ", eq52 " +
                     std::to_string(compat52) + "/" + std::to_string(k) + "; quasimodule law holds for " +
                     std::to_string(quasi) + "/" + std::to_string(k) + " (beta = id only)");

    std::mt19937 rng(20261015);
    std::size_t agree = 0, negatives = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto& m = modules[rng() % modules.size()];
        const bool on_action = rng() % 2 == 0;
        const auto& target = on_action ? m.action() : m.coaction();
        const std::size_t r = rng() % target.rows(), c = rng() % target.cols();
        const auto bump = matrix_unit<Q>(target.rows(), target.cols(), r, c, QQ.one());
        const auto pm = on_action ? m.with_action(target + bump) : m.with_coaction(target + bump);
        const auto r51 = check_ydq(pm, YdqForm::eq51), r52 = check_ydq(pm, YdqForm::eq52);
        negatives += !r51.all_hold() && !r52.all_hold();
        agree += r51.holds("eq51") == r52.holds("eq52");
    }
    o.require(agree == 50 && negatives == 50, "eq51 and eq52 agree on " + std::to_string(agree) +
                                                  "/50 perturbed negatives (" + std::to_string(negatives) +
                                                  " rejected by both)");
}

// ---- criterion 7 ----------------------------------------------------------

struct BraidTally {
    std::array<std::size_t, 6> pass{};
    std::size_t runs = 0;
    std::size_t invertible = 0;  // braiding matrix has full rank
    bool nontrivial_naturality = false;
};

BraidTally braid_all(const std::vector<YDQModule<Q>>& fx) {
    BraidTally tally;
    for (std::size_t i = 0; i < fx.size(); ++i)
        for (std::size_t j = 0; j < fx.size(); ++j) {
            const auto& p = fx[(i + j + 1) % fx.size()];
            ++tally.runs;
            for (std::size_t s = 0; s < 6; ++s) {
                const auto step = all_braid_steps[s];
                std::optional<NaturalityPair<Q>> pair;
                if (step == BraidStep::naturality) {
                    pair = NaturalityPair<Q>{nontrivial_endomorphism(fx[i]), nontrivial_endomorphism(fx[j])};
                    tally.nontrivial_naturality = tally.nontrivial_naturality || !(pair->f.matrix == fx[i].id()) ||
                                                  !(pair->g.matrix == fx[j].id());
                }
                const auto r = check_braiding_axioms(fx[i], fx[j], p, step, pair);
                tally.pass[s] += r.all_hold();
                if (step == BraidStep::bijective) {
                    std::size_t rk = 0, full = 1;
                    for (const auto& [key, v] : r.facts()) {
                        if (key == "matrix_rank") rk = v.get<std::size_t>();
                        if (key == "full_rank") full = v.get<std::size_t>();
                    }
                    tally.invertible += rk == full;
                }
            }
        }
    return tally;
}

std::string tally_text(const BraidTally& t) {
    std::string s;
    for (std::size_t k = 0; k < 6; ++k)
        s += (k ? ", " : "") + std::string(to_string(all_braid_steps[k])) + " " + std::to_string(t.pass[k]) + "/" +
             std::to_string(t.runs);
    return s + "; braiding matrix invertible " + std::to_string(t.invertible) + "/" + std::to_string(t.runs);
}

std::vector<YDQModule<Q>> three_modules(const CayleyTable& t, const BasePtr<Q>& base) {
    const auto autos = automorphisms_of(t, base);
    const std::size_t k = autos.size();
    return {build_H_alpha_beta(make_gpair(autos[0], autos[0])), build_H_alpha_beta(make_gpair(autos[0], autos[k / 2])),
            build_H_alpha_beta(make_gpair(autos[k - 1], autos[1]))};
}

void braided_crossed(Outcome& o) {
    {
        const auto t = fixtures::s3_table();
        const auto base = algebra_of(t);
        const auto fx = three_modules(t, base);
        const auto tally = braid_all(fx);
        const auto crossed = check_crossed_structure(fx);
        o.info.push_back("control S3: " + tally_text(tally) + "; crossed structure " +
                         (crossed.all_hold() ? "passes" : "fails"));
    }
    const auto t = fixtures::m12_table();
    const auto base = algebra_of(t);
    const auto fx = three_modules(t, base);
    const auto tally = braid_all(fx);
    bool all = true;
    for (auto p : tally.pass) all = all && p == tally.runs;
    o.require(all, "braiding steps over " + std::to_string(fx.size()) + " GPairs on M12: " + tally_text(tally));
    o.require(tally.nontrivial_naturality, "naturality exercised with a non-identity morphism");
    const auto crossed = check_crossed_structure(fx);
    std::string flags;
    for (const auto& c : crossed.checks()) flags += (flags.empty() ? "" : ", ") + c.name + (c.holds ? " ok" : " FAIL");
    o.require(crossed.all_hold(), "check_crossed_structure: " + flags);
}

// ---- criterion 8 ----------------------------------------------------------

void g2_s3(Outcome& o) {
    const auto t = fixtures::s3_table();
    const auto base = algebra_of(t);
    const auto autos = automorphisms_of(t, base);
    const auto r = check_gpair_group(autos);
    std::size_t pairs = 0;
    for (const auto& [k, v] : r.facts())
        if (k == "pairs") pairs = v.get<std::size_t>();
    o.require(autos.size() == 6 && pairs == 36, "36 pairs from Aut(S3)");
    o.require(r.all_hold(), "unit, inverse and associativity axioms hold");
}

// ---- criterion 9 ----------------------------------------------------------

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& cmd) {
    Captured c;
    FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw IOError("cannot run '" + cmd + "'");
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
    const int raw = ::pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

void determinism(Outcome& o) {
    const fs::path dir = HQG_WORK_DIR;
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cli = quoted(HQG_CLI_PATH);
    auto f = [&](const std::string& name) { return quoted(dir / name); };
    auto make = [&](const std::string& args) {
        const auto c = capture(cli + " " + args);
        if (c.status != 0) throw Error("fixture command failed: hqg " + args);
    };
    make("chein --builtin s3 --levels 0 -o " + f("s3.json"));
    make("chein --builtin s3 -o " + f("m12.json"));
    make("chein --builtin idempotent --levels 0 -o " + f("idem.json"));
    make("chein --builtin c2 -o " + f("c2x2.json"));
    make("loop-algebra " + f("s3.json") + " -o " + f("kS3.json"));
    make("loop-algebra " + f("m12.json") + " -o " + f("kM12.json"));
    make("loop-algebra --no-antipode " + f("idem.json") + " -o " + f("kI.json"));
    make("dualize " + f("kM12.json") + " -o " + f("dM12.json"));
    const auto perms = loop_automorphisms(fixtures::m12_table());
    auto perm = [&](std::size_t k) {
        std::string s = "perm:";
        for (std::size_t i = 0; i < perms[k].size(); ++i) s += (i ? "," : "") + std::to_string(perms[k][i]);
        return s;
    };
    const std::size_t k = perms.size();
    make("ydq-build --base " + f("kM12.json") + " -o " + f("h0.json"));
    make("ydq-build --base " + f("kM12.json") + " --beta " + perm(k / 2) + " -o " + f("h1.json"));
    make("ydq-build --base " + f("kM12.json") + " --alpha " + perm(k - 1) + " --beta " + perm(1) + " -o " + f("h2.json"));

    const std::vector<std::string> runs = {
        "equiv " + f("kS3.json") + " --theorem t31",
        "antipode " + f("kS3.json") + " --which both",
        "galois " + f("kS3.json") + " --which T1",
        "galois " + f("kS3.json") + " --which T2",
        "check-loop " + f("m12.json") + " --identity moufang --identity associative --galois T1 --galois T2",
        "autos " + f("m12.json"),
        "check-hopf " + f("kM12.json") + " --mode quasigroup --identity flexible --identity moufang --lr",
        "check-bialgebra " + f("kM12.json"),
        "equiv " + f("kM12.json") + " --theorem t43",
        "galois " + f("kM12.json") + " --which T1 --condition def41_42_compat",
        "galois " + f("kM12.json") + " --which T1 --condition thm31_module_comodule",
        "equiv " + f("kI.json") + " --theorem t31",
        "check-hopf " + f("dM12.json") + " --mode coquasigroup --identity moufang",
        "check-bialgebra " + f("dM12.json"),
        "check-loop " + f("c2x2.json") + " --galois T1 --galois T2",
        "ydq-check " + f("h1.json") + " --form eq51",
        "ydq-check " + f("h1.json") + " --form eq52",
        "braid " + f("h0.json") + " " + f("h1.json") + " --p " + f("h2.json"),
        "crossed-check " + f("h0.json") + " " + f("h1.json") + " " + f("h2.json"),
        "--field fp:7 equiv " + f("kS3.json") + " --theorem t31",
    };
    std::size_t identical = 0;
    std::string first_diff;
    for (const auto& args : runs) {
        const auto a = capture(cli + " --json " + args), b = capture(cli + " --json " + args);
        const bool same = a.status == b.status && a.out == b.out && !a.out.empty() && a.status >= 0 && a.status <= 1;
        identical += same;
        if (!same && first_diff.empty()) first_diff = args;
    }
    o.require(identical == runs.size(), std::to_string(identical) + "/" + std::to_string(runs.size()) +
                                            " CLI runs byte-identical across two executions" +
                                            (first_diff.empty() ? "" : " (first difference: " + first_diff + ")"));
}

}  // namespace

int main() {
    std::cout << "acceptance criteria\n";
    run(1, "S3 over the rationals", 1.0, group_algebra_s3);
    run(2, "M12 = chein(S3)", 10.0, chein_m12);
    run(3, "idempotent monoid", 0.1, idempotent_monoid_case);
    run(4, "dualize(M12)", 10.0, dual_m12);
    run(5, "all loops of order <= 4", 30.0, small_tables);
    run(6, "H_{id,beta} over Aut(M12) under both compatibility forms", 60.0, ydq_forms);
    run(7, "braiding and crossed structure over M12", 600.0, braided_crossed);
    run(8, "G^2 axioms over Aut(S3)", 5.0, g2_s3);
    run(9, "CLI --json determinism", 600.0, determinism);
    std::cout << met << "/9 criteria met\n";
    return broken == 0 ? 0 : 1;
}
