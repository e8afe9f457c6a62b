#include "hqg/loop/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hqg/errors.hpp"

namespace hqg {

namespace {

std::optional<Element> find_identity(std::size_t n, const std::vector<Element>& t) {
    for (Element e = 0; e < n; ++e) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
        if (ok) return e;
    }
    return std::nullopt;
}

Witness element_witness(std::vector<Element> input, std::optional<Element> lhs, std::optional<Element> rhs,
                        std::string detail = {}) {
    Witness w;
    w.input.assign(input.begin(), input.end());
    if (lhs) w.lhs.push_back({{*lhs}, "1"});
    if (rhs) w.rhs.push_back({{*rhs}, "1"});
    w.detail = std::move(detail);
    return w;
}

bool is_permutation_of_range(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != i) return false;
    return true;
}

}  // namespace

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows, std::string name) {
    const std::size_t n = rows.size();
    if (n == 0) throw FormatError("empty Cayley table");
    std::vector<Element> t;
    t.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw FormatError("Cayley table row has " + std::to_string(r.size()) + " entries, expected " +
                                             std::to_string(n));
        for (Element x : r) {
            if (x >= n) throw IndexOutOfRange("table entry " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
            t.push_back(x);
        }
    }
    const auto e = find_identity(n, t);
    if (!e) throw NoIdentity("table has no two-sided identity element");
    CayleyTable table(n, std::move(t), std::move(name));
    if (*e == 0) return table;
    Permutation swap(n);
    std::iota(swap.begin(), swap.end(), Element{0});
    std::swap(swap[0], swap[*e]);
    return table.relabelled(swap);
}

std::vector<std::vector<Element>> CayleyTable::rows() const {
    std::vector<std::vector<Element>> r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
    return r;
}

CayleyTable CayleyTable::relabelled(const Permutation& sigma) const {
    std::vector<Element> t(n_ * n_);
    for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b) t[sigma[a] * n_ + sigma[b]] = sigma[(*this)(a, b)];
    return CayleyTable(n_, std::move(t), name_);
}

CayleyTable parse_cayley(std::string_view source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw FormatError("empty Cayley table document");
    std::vector<std::vector<Element>> rows;
    std::string name;
    if (source[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(source);
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(std::string("Cayley table: ") + e.what());
        }
        if (!j.contains("order") || !j.contains("table")) throw FormatError("Cayley table needs 'order' and 'table'");
        try {
            const auto n = j.at("order").get<std::size_t>();
            for (const auto& row : j.at("table")) {
                std::vector<Element> r;
                for (const auto& x : row) {
                    const auto v = x.get<long long>();
                    if (v < 0) throw IndexOutOfRange("negative table entry");
                    r.push_back(static_cast<Element>(v));
                }
                rows.push_back(std::move(r));
            }
            if (rows.size() != n) throw FormatError("'order' disagrees with the number of table rows");
            if (j.contains("name")) name = j.at("name").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(std::string("Cayley table: ") + e.what());
        }
    } else {
        std::istringstream in{std::string(source)};
        std::string line, keyword;
        std::size_t n = 0;
        bool have_header = false;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            if (!have_header) {
                if (!(ls >> keyword)) continue;
                if (keyword != "order" || !(ls >> n) || n == 0) throw FormatError("expected header 'order n'");
                have_header = true;
                continue;
            }
            std::vector<Element> r;
            std::string tok;
            while (ls >> tok) {
                if (tok.find_first_not_of("0123456789") != std::string::npos)
                    throw FormatError("non-numeric table entry '" + tok + "'");
                r.push_back(static_cast<Element>(std::stoul(tok)));
            }
            if (!r.empty()) rows.push_back(std::move(r));
        }
        if (!have_header) throw FormatError("missing 'order n' header");
        if (rows.size() != n) throw FormatError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
    }
    return CayleyTable::from_rows(rows, std::move(name));
}

CayleyTable read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_cayley(ss.str());
}

std::string emit_cayley(const CayleyTable& t) {
    std::ostringstream os;
    os << "{\n";
    if (!t.name().empty()) os << "  \"name\": " << nlohmann::json(t.name()).dump() << ",\n";
    os << "  \"order\": " << t.order() << ",\n  \"table\": [\n";
    for (Element a = 0; a < t.order(); ++a) {
        os << "    [";
        for (Element b = 0; b < t.order(); ++b) os << (b ? ", " : "") << t(a, b);
        os << "]" << (a + 1 < t.order() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string_view to_string(LoopIdentity id) {
    switch (id) {
        case LoopIdentity::flexible: return "flexible";
        case LoopIdentity::alternative: return "alternative";
        case LoopIdentity::moufang: return "moufang";
        case LoopIdentity::associative: return "associative";
    }
    return "?";
}

LoopIdentity parse_loop_identity(std::string_view s) {
    for (auto id : {LoopIdentity::flexible, LoopIdentity::alternative, LoopIdentity::moufang, LoopIdentity::associative})
        if (to_string(id) == s) return id;
    throw FormatError("unknown loop identity '" + std::string(s) + "'");
}

std::string_view to_string(GaloisSide s) { return s == GaloisSide::T1 ? "T1" : "T2"; }

GaloisSide parse_galois_side(std::string_view s) {
    if (s == "T1" || s == "t1") return GaloisSide::T1;
    if (s == "T2" || s == "t2") return GaloisSide::T2;
    throw FormatError("unknown Galois map '" + std::string(s) + "'");
}

LoopReport check_quasigroup(const CayleyTable& t) {
    const Element n = static_cast<Element>(t.order());
    LoopReport r;
    r.has_identity = true;
    for (Element x = 0; x < n; ++x) r.has_identity = r.has_identity && t(0, x) == x && t(x, 0) == x;

    r.latin = true;
    for (Element a = 0; a < n && r.latin; ++a) {
        std::vector<Element> row(n), col(n);
        for (Element b = 0; b < n; ++b) {
            row[b] = t(a, b);
            col[b] = t(b, a);
        }
        if (!is_permutation_of_range(row)) {
            r.latin = false;
            r.latin_witness = element_witness({a}, std::nullopt, std::nullopt, "row " + std::to_string(a) + " repeats an element");
        } else if (!is_permutation_of_range(col)) {
            r.latin = false;
            r.latin_witness =
                element_witness({a}, std::nullopt, std::nullopt, "column " + std::to_string(a) + " repeats an element");
        }
    }

    // u has an inverse x when x(uv) = v and (vu)x = v for all v.
    auto first_failure = [&](Element u, Element x) -> std::optional<Element> {
        for (Element v = 0; v < n; ++v)
            if (t(x, t(u, v)) != v || t(t(v, u), x) != v) return v;
        return std::nullopt;
    };
    Permutation inv(n);
    r.ip = true;
    for (Element u = 0; u < n && r.ip; ++u) {
        std::optional<Element> found;
        for (Element x = 0; x < n && !found; ++x)
            if (!first_failure(u, x)) found = x;
        if (found) {
            inv[u] = *found;
            continue;
        }
        r.ip = false;
        // Report the first v that defeats the natural candidate (a left inverse of u).
        std::optional<Element> candidate;
        for (Element x = 0; x < n && !candidate; ++x)
            if (t(x, u) == 0) candidate = x;
        const Element v = candidate ? *first_failure(u, *candidate) : 0;
        r.ip_witness = element_witness({u, v}, std::nullopt, std::nullopt,
                                       candidate ? "candidate inverse " + std::to_string(*candidate) + " fails at v"
                                                 : "no left inverse");
    }
    if (r.ip) r.inverse = std::move(inv);
    return r;
}

LoopReport full_loop_report(const CayleyTable& t) {
    LoopReport r = check_quasigroup(t);
    if (!(r.latin && r.has_identity)) return r;
    auto run = [&](LoopIdentity id, std::optional<bool>& slot) {
        const auto v = check_loop_identity(t, id);
        slot = v.holds;
        if (!v.holds) r.identity_witnesses.emplace_back(id, v.witness);
    };
    run(LoopIdentity::flexible, r.flexible);
    run(LoopIdentity::alternative, r.alternative);
    run(LoopIdentity::moufang, r.moufang);
    run(LoopIdentity::associative, r.associative);
    return r;
}

Report LoopReport::to_report() const {
    Report rep("loop");
    rep.add("latin", latin, latin_witness);
    rep.add("has_identity", has_identity);
    rep.add("ip", ip, ip_witness);
    auto add_identity = [&](LoopIdentity id, const std::optional<bool>& v) {
        if (!v) return;
        std::optional<Witness> w;
        for (const auto& [k, tuple] : identity_witnesses)
            if (k == id) w = element_witness(tuple, std::nullopt, std::nullopt);
        rep.add(std::string(to_string(id)), *v, w);
    };
    add_identity(LoopIdentity::flexible, flexible);
    add_identity(LoopIdentity::alternative, alternative);
    add_identity(LoopIdentity::moufang, moufang);
    add_identity(LoopIdentity::associative, associative);
    if (inverse) rep.note("inverse", *inverse);
    return rep;
}

IdentityVerdict check_loop_identity(const CayleyTable& t, LoopIdentity mode) {
    const auto q = check_quasigroup(t);
    if (!(q.latin && q.has_identity)) throw NotALoop("table is not a Latin square with identity");
    const Element n = static_cast<Element>(t.order());
    IdentityVerdict v;
    auto fail = [&](std::vector<Element> w) {
        v.holds = false;
        v.witness = std::move(w);
    };
    switch (mode) {
        case LoopIdentity::flexible:
            for (Element u = 0; u < n && v.holds; ++u)
                for (Element w = 0; w < n && v.holds; ++w)
                    if (t(u, t(w, u)) != t(t(u, w), u)) fail({u, w});
            break;
        case LoopIdentity::alternative:
            for (Element u = 0; u < n && v.holds; ++u)
                for (Element w = 0; w < n && v.holds; ++w)
                    if (t(u, t(u, w)) != t(t(u, u), w) || t(u, t(w, w)) != t(t(u, w), w)) fail({u, w});
            break;
        case LoopIdentity::moufang:
            for (Element u = 0; u < n && v.holds; ++u)
                for (Element a = 0; a < n && v.holds; ++a)
                    for (Element w = 0; w < n && v.holds; ++w)
                        if (t(u, t(a, t(u, w))) != t(t(t(u, a), u), w)) fail({u, a, w});
            break;
        case LoopIdentity::associative:
            for (Element u = 0; u < n && v.holds; ++u)
                for (Element a = 0; a < n && v.holds; ++a)
                    for (Element w = 0; w < n && v.holds; ++w)
                        if (t(u, t(a, w)) != t(t(u, a), w)) fail({u, a, w});
            break;
    }
    return v;
}

bool set_galois_bijective(const CayleyTable& t, GaloisSide which) {
    const Element n = static_cast<Element>(t.order());
    std::vector<char> hit(static_cast<std::size_t>(n) * n, 0);
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) {
            const auto gh = t(g, h);
            const std::size_t image = which == GaloisSide::T1 ? g * n + gh : gh * n + h;
            if (hit[image]) return false;
            hit[image] = 1;
        }
    return true;
}

CayleyTable chein_double(const CayleyTable& g) {
    const auto q = check_quasigroup(g);
    if (!(q.latin && q.has_identity) || !check_loop_identity(g, LoopIdentity::associative).holds)
        throw NotAGroup("Chein doubling needs a group table");
    const Element n = static_cast<Element>(g.order());
    const auto& inv = *q.inverse;
    std::vector<std::vector<Element>> rows(2 * n, std::vector<Element>(2 * n));
    for (Element a = 0; a < 2 * n; ++a)
        for (Element b = 0; b < 2 * n; ++b) {
            const Element x = a % n, y = b % n;
            const bool xu = a >= n, yu = b >= n;
            if (!xu && !yu)
                rows[a][b] = g(x, y);
            else if (!xu && yu)
                rows[a][b] = g(y, x) + n;
            else if (xu && !yu)
                rows[a][b] = g(x, inv[y]) + n;
            else
                rows[a][b] = g(inv[y], x);
        }
    return CayleyTable::from_rows(rows, g.name().empty() ? std::string{} : "M(" + g.name() + ",2)");
}

CayleyTable builtin_table(std::string_view name) {
    const std::string s(name);
    auto size = [&](std::size_t lo, std::size_t hi) {
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(s.substr(1), &used);
            if (used + 1 != s.size()) n = 0;
        } catch (const std::exception&) {
            n = 0;
        }
        if (n < lo || n > hi) throw FormatError("unknown builtin table '" + s + "'");
        return n;
    };
    if (s == "idempotent") return CayleyTable::from_rows({{0, 1}, {1, 1}}, "idempotent");
    if (s.size() > 1 && s[0] == 'c') {
        const std::size_t n = size(1, 64);
        std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<Element>((a + b) % n);
        return CayleyTable::from_rows(rows, "C" + std::to_string(n));
    }
    if (s.size() > 1 && s[0] == 's') {
        const std::size_t k = size(1, 5);
        std::vector<Permutation> els;
        Permutation p(k);
        std::iota(p.begin(), p.end(), Element{0});
        do els.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::vector<std::vector<Element>> rows(els.size(), std::vector<Element>(els.size()));
        for (std::size_t a = 0; a < els.size(); ++a)
            for (std::size_t b = 0; b < els.size(); ++b) {
                const auto c = compose(els[a], els[b]);
                rows[a][b] = static_cast<Element>(std::lower_bound(els.begin(), els.end(), c) - els.begin());
            }
        return CayleyTable::from_rows(rows, "S" + std::to_string(k));
    }
    throw FormatError("unknown builtin table '" + s + "'");
}

namespace {

bool is_automorphism(const CayleyTable& t, const Permutation& s) {
    const Element n = static_cast<Element>(t.order());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (s[t(x, y)] != t(s[x], s[y])) return false;
    return true;
}

std::vector<Permutation> exhaustive_automorphisms(const CayleyTable& t) {
    const Element n = static_cast<Element>(t.order());
    Permutation s(n);
    std::iota(s.begin(), s.end(), Element{0});
    std::vector<Permutation> out;
    do {
        if (is_automorphism(t, s)) out.push_back(s);
    } while (std::next_permutation(s.begin() + 1, s.end()));
    return out;
}

// Assigns images to 0,1,2,... in order; after each assignment every product of
// already-assigned elements whose result is also assigned must be respected,
// and a product landing on an unassigned element must not collide with an
// image already in use.
void backtrack(const CayleyTable& t, Permutation& s, std::vector<char>& used, std::size_t k,
               std::vector<Permutation>& out) {
    const Element n = static_cast<Element>(t.order());
    if (k == n) {
        if (is_automorphism(t, s)) out.push_back(s);
        return;
    }
    for (Element c = 1; c < n; ++c) {
        if (used[c]) continue;
        s[k] = c;
        bool ok = true;
        for (Element x = 0; x <= k && ok; ++x)
            for (Element y = 0; y <= k && ok; ++y) {
                if (x != k && y != k) continue;
                const Element z = t(x, y);
                const Element img = t(s[x], s[y]);
                if (z <= k)
                    ok = s[z] == img;
                else
                    ok = !used[img] && img != c;
            }
        if (ok) {
            used[c] = 1;
            backtrack(t, s, used, k + 1, out);
            used[c] = 0;
        }
    }
}

}  // namespace

std::vector<Permutation> loop_automorphisms(const CayleyTable& t, AutomorphismSearch strategy) {
    const auto q = check_quasigroup(t);
    if (!(q.latin && q.has_identity)) throw NotALoop("automorphisms are enumerated for loops only");
    const Element n = static_cast<Element>(t.order());
    if (strategy == AutomorphismSearch::automatic)
        strategy = n <= 8 ? AutomorphismSearch::exhaustive : AutomorphismSearch::backtracking;
    std::vector<Permutation> out;
    if (strategy == AutomorphismSearch::exhaustive) {
        out = exhaustive_automorphisms(t);
    } else {
        Permutation s(n, 0);
        std::vector<char> used(n, 0);
        used[0] = 1;
        if (n == 1)
            out.push_back(s);
        else
            backtrack(t, s, used, 1, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Element>(i);
    return r;
}

}  // namespace hqg
