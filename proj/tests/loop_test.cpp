#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hqg/errors.hpp"
#include "hqg/loop/cayley.hpp"
#include "fixtures.hpp"

using namespace hqg;
using Rows = std::vector<std::vector<Element>>;

namespace {

// Independent IP test straight from the definition.
bool oracle_ip(const Rows& t) {
    const Element n = static_cast<Element>(t.size());
    for (Element u = 0; u < n; ++u) {
        bool found = false;
        for (Element x = 0; x < n && !found; ++x) {
            bool ok = true;
            for (Element v = 0; v < n && ok; ++v) ok = t[x][t[u][v]] == v && t[t[v][u]][x] == v;
            found = ok;
        }
        if (!found) return false;
    }
    return true;
}

// First reduced Latin square of the given order (lexicographic row fill) for
// which `accept` holds.
std::optional<Rows> first_reduced_latin(Element n, const std::function<bool(const Rows&)>& accept) {
    Rows t(n, std::vector<Element>(n, 0));
    for (Element i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
    std::optional<Rows> hit;
    std::function<bool(Element)> fill = [&](Element cell) -> bool {
        const Element r = 1 + cell / (n - 1), c = 1 + cell % (n - 1);
        if (r == n) {
            if (accept(t)) {
                hit = t;
                return true;
            }
            return false;
        }
        for (Element v = 0; v < n; ++v) {
            bool ok = true;
            for (Element k = 0; k < c && ok; ++k) ok = t[r][k] != v;
            for (Element k = 0; k < r && ok; ++k) ok = t[k][c] != v;
            if (!ok) continue;
            t[r][c] = v;
            if (fill(cell + 1)) return true;
        }
        return false;
    };
    fill(0);
    return hit;
}

// Automorphisms by generator images: choose generators greedily, express every
// element as a word, and keep the image tuples that extend to a homomorphism.
std::vector<Permutation> automorphisms_by_generators(const CayleyTable& t) {
    const Element n = static_cast<Element>(t.order());
    std::vector<Element> gens;
    std::vector<std::vector<Element>> word(n);  // word[x]: how x was first reached
    std::vector<bool> reached(n, false);
    reached[0] = true;
    std::vector<Element> order_reached{0};
    std::vector<std::pair<Element, Element>> parent(n, {0, 0});
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            const auto snapshot = order_reached;
            for (Element a : snapshot)
                for (Element b : snapshot) {
                    const Element c = t(a, b);
                    if (!reached[c]) {
                        reached[c] = true;
                        parent[c] = {a, b};
                        order_reached.push_back(c);
                        grew = true;
                    }
                }
        }
    };
    for (Element x = 1; x < n; ++x)
        if (!reached[x]) {
            gens.push_back(x);
            reached[x] = true;
            parent[x] = {x, x};
            order_reached.push_back(x);
            close();
        }
    std::vector<Permutation> out;
    std::vector<Element> images(gens.size());
    std::function<void(std::size_t)> choose = [&](std::size_t k) {
        if (k == gens.size()) {
            Permutation s(n, 0);
            for (Element x : order_reached) {
                if (x == 0) continue;
                const auto g = std::find(gens.begin(), gens.end(), x);
                s[x] = g != gens.end() ? images[g - gens.begin()] : t(s[parent[x].first], s[parent[x].second]);
            }
            auto sorted = s;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b)
                    if (s[t(a, b)] != t(s[a], s[b])) return;
            out.push_back(s);
            return;
        }
        for (Element c = 1; c < n; ++c) {
            images[k] = c;
            choose(k + 1);
        }
    };
    choose(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(ParseCayley, TextForm) {
    const auto t = parse_cayley("order 2\n0 1\n1 0\n");
    EXPECT_EQ(t.order(), 2u);
    EXPECT_EQ(t(1, 1), 0u);
}

TEST(ParseCayley, StructuredFormRoundTrip) {
    const auto s3 = fixtures::s3_table();
    const auto text = emit_cayley(s3);
    EXPECT_EQ(parse_cayley(text), s3);
    EXPECT_EQ(emit_cayley(parse_cayley(text)), text);
}

TEST(ParseCayley, NormalizesIdentity) {
    // identity is element 1 here
    const auto t = parse_cayley("order 2\n1 0\n0 1\n");
    EXPECT_EQ(t(0, 1), 1u);
    EXPECT_EQ(t(1, 1), 0u);
}

TEST(ParseCayley, Errors) {
    EXPECT_THROW(parse_cayley("order 2\n0 1\n"), FormatError);
    EXPECT_THROW(parse_cayley("order 2\n0 1\n1 5\n"), IndexOutOfRange);
    EXPECT_THROW(parse_cayley("order 2\n1 1\n1 1\n"), NoIdentity);
    EXPECT_THROW(parse_cayley("{\"order\": 2}"), FormatError);
    EXPECT_THROW(parse_cayley("order 2\n0 x\n1 0\n"), FormatError);
}

TEST(CheckQuasigroup, C2) {
    const auto r = check_quasigroup(parse_cayley("order 2\n0 1\n1 0\n"));
    EXPECT_TRUE(r.latin);
    EXPECT_TRUE(r.ip);
    EXPECT_EQ(*r.inverse, (Permutation{0, 1}));
}

TEST(CheckQuasigroup, RepeatedRowIsParsedButNotLatin) {
    const auto t = parse_cayley("order 3\n0 1 2\n1 1 1\n2 1 0\n");
    const auto r = check_quasigroup(t);
    EXPECT_FALSE(r.latin);
    ASSERT_TRUE(r.latin_witness.has_value());
    EXPECT_EQ(r.latin_witness->input, (std::vector<std::size_t>{1}));
    EXPECT_FALSE(set_galois_bijective(t, GaloisSide::T1));
}

TEST(CheckQuasigroup, NonIPLatinSquareOfOrderFive) {
    const auto found = first_reduced_latin(5, [](const Rows& t) { return !oracle_ip(t); });
    ASSERT_TRUE(found.has_value());
    const auto r = check_quasigroup(CayleyTable::from_rows(*found));
    EXPECT_TRUE(r.latin);
    EXPECT_FALSE(r.ip);
    ASSERT_TRUE(r.ip_witness.has_value());
    EXPECT_EQ(r.ip_witness->input.size(), 2u);
}

TEST(CheckQuasigroup, InverseSatisfiesBothEquations) {
    const auto m12 = fixtures::m12_table();
    const auto r = check_quasigroup(m12);
    ASSERT_TRUE(r.ip);
    for (Element g = 0; g < 12; ++g)
        for (Element h = 0; h < 12; ++h) {
            EXPECT_EQ(m12((*r.inverse)[g], m12(g, h)), h);
            EXPECT_EQ(m12(m12(h, g), (*r.inverse)[g]), h);
        }
}

TEST(LoopIdentity, GroupsSatisfyEverything) {
    const auto s3 = fixtures::s3_table();
    for (auto id : {LoopIdentity::flexible, LoopIdentity::alternative, LoopIdentity::moufang, LoopIdentity::associative})
        EXPECT_TRUE(check_loop_identity(s3, id).holds) << to_string(id);
}

TEST(LoopIdentity, M12IsMoufangNotAssociative) {
    const auto m12 = fixtures::m12_table();
    EXPECT_TRUE(check_loop_identity(m12, LoopIdentity::moufang).holds);
    const auto a = check_loop_identity(m12, LoopIdentity::associative);
    EXPECT_FALSE(a.holds);
    ASSERT_EQ(a.witness.size(), 3u);
    const auto [x, y, z] = std::tuple(a.witness[0], a.witness[1], a.witness[2]);
    EXPECT_NE(m12(x, m12(y, z)), m12(m12(x, y), z));
    // lexicographic-first: every earlier triple associates
    for (Element p = 0; p < 12; ++p)
        for (Element q = 0; q < 12; ++q)
            for (Element r = 0; r < 12; ++r) {
                if (std::tuple(p, q, r) >= std::tuple(x, y, z)) continue;
                EXPECT_EQ(m12(p, m12(q, r)), m12(m12(p, q), r));
            }
}

TEST(LoopIdentity, NonMoufangIPLoop) {
    const auto found = fixtures::nonassociative_ip_loop_rows();
    ASSERT_TRUE(oracle_ip(found));
    ASSERT_FALSE(fixtures::associative(found));
    const auto t = CayleyTable::from_rows(found);
    EXPECT_TRUE(check_quasigroup(t).ip);
    EXPECT_FALSE(check_loop_identity(t, LoopIdentity::moufang).holds);
    const auto full = full_loop_report(t);
    EXPECT_FALSE(*full.moufang);
}

TEST(LoopIdentity, RequiresLoop) {
    EXPECT_THROW(check_loop_identity(parse_cayley("order 3\n0 1 2\n1 1 1\n2 1 0\n"), LoopIdentity::flexible), NotALoop);
}

TEST(LoopReport, MoufangImpliesFlexibleAndAlternative) {
    for (const auto& t : {fixtures::s3_table(), fixtures::m12_table(), chein_double(parse_cayley("order 2\n0 1\n1 0\n"))}) {
        const auto r = full_loop_report(t);
        if (*r.moufang) {
            EXPECT_TRUE(*r.flexible);
            EXPECT_TRUE(*r.alternative);
        }
    }
}

TEST(SetGalois, LatinIffBothBijectiveOrderThree) {
    // every magma of order 3 with identity 0
    std::vector<Element> free(4, 0);
    for (int code = 0; code < 81; ++code) {
        int c = code;
        Rows rows{{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
        rows[1][1] = c % 3, c /= 3;
        rows[1][2] = c % 3, c /= 3;
        rows[2][1] = c % 3, c /= 3;
        rows[2][2] = c % 3;
        const auto t = CayleyTable::from_rows(rows);
        const bool latin = check_quasigroup(t).latin;
        EXPECT_EQ(latin, set_galois_bijective(t, GaloisSide::T1) && set_galois_bijective(t, GaloisSide::T2));
    }
}

TEST(Chein, C2GivesGroupOfOrderFour) {
    const auto d = chein_double(parse_cayley("order 2\n0 1\n1 0\n"));
    EXPECT_EQ(d.order(), 4u);
    EXPECT_TRUE(check_loop_identity(d, LoopIdentity::associative).holds);
    EXPECT_EQ(d.identity(), 0u);
}

TEST(Chein, S3GivesNonassociativeMoufang) {
    const auto d = chein_double(fixtures::s3_table());
    EXPECT_EQ(d.order(), 12u);
    EXPECT_EQ(d, fixtures::m12_table());
    EXPECT_EQ(parse_cayley(emit_cayley(d)), d);
    // frozen convention on a spot value: (g)(hu) = (hg)u
    const auto s3 = fixtures::s3_table();
    for (Element g = 0; g < 6; ++g)
        for (Element h = 0; h < 6; ++h) EXPECT_EQ(d(g, 6 + h), 6 + s3(h, g));
}

TEST(Chein, RejectsNonGroup) {
    EXPECT_THROW(chein_double(fixtures::m12_table()), NotAGroup);
}

TEST(Automorphisms, C2AndS3) {
    EXPECT_EQ(loop_automorphisms(parse_cayley("order 2\n0 1\n1 0\n")), (std::vector<Permutation>{{0, 1}}));
    const auto s3 = fixtures::s3_table();
    std::vector<Permutation> brute;
    Permutation p(6);
    std::iota(p.begin(), p.end(), Element{0});
    do {
        bool ok = true;
        for (Element a = 0; a < 6 && ok; ++a)
            for (Element b = 0; b < 6 && ok; ++b) ok = p[s3(a, b)] == s3(p[a], p[b]);
        if (ok) brute.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(brute.size(), 6u);
    EXPECT_EQ(loop_automorphisms(s3), brute);
    EXPECT_EQ(loop_automorphisms(s3, AutomorphismSearch::backtracking), brute);
}

TEST(Automorphisms, M12CrossCheck) {
    const auto m12 = fixtures::m12_table();
    const auto autos = loop_automorphisms(m12);
    EXPECT_EQ(autos, automorphisms_by_generators(m12));
    EXPECT_EQ(autos.size(), 108u);
    const std::set<Permutation> group(autos.begin(), autos.end());
    for (const auto& a : autos) {
        EXPECT_TRUE(group.count(inverse(a)));
        for (const auto& b : autos) EXPECT_TRUE(group.count(compose(a, b)));
    }
}

TEST(Builtin, NamedTables) {
    EXPECT_EQ(builtin_table("s3"), fixtures::s3_table());
    EXPECT_EQ(builtin_table("c2"), CayleyTable::from_rows({{0, 1}, {1, 0}}));
    EXPECT_EQ(builtin_table("idempotent"), fixtures::idempotent_table());
    EXPECT_EQ(builtin_table("s4").order(), 24u);
    EXPECT_TRUE(check_loop_identity(builtin_table("c5"), LoopIdentity::associative).holds);
    for (const char* bad : {"c0", "s6", "x3", "c", "c2x"}) EXPECT_THROW(builtin_table(bad), FormatError) << bad;
}
