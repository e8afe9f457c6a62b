// Tables built directly from their definitions, independent of the library's
// constructions, for use as oracles.

#ifndef HQG_TESTS_FIXTURES_HPP
#define HQG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "hqg/loop/cayley.hpp"

namespace fixtures {

using hqg::Element;

/// S3 as permutations of {0,1,2} in lexicographic order; (ab)(i) = a(b(i)).
inline std::vector<std::vector<Element>> s3_rows() {
    std::vector<std::array<int, 3>> els;
    std::array<int, 3> p{0, 1, 2};
    do els.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
        return static_cast<Element>(std::find(els.begin(), els.end(), q) - els.begin());
    };
    std::vector<std::vector<Element>> rows(6, std::vector<Element>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = els[a][els[b][i]];
            rows[a][b] = index(c);
        }
    return rows;
}

inline hqg::CayleyTable s3_table() { return hqg::CayleyTable::from_rows(s3_rows(), "S3"); }

/// M(S3,2) written out from the doubling rules, g at g and gu at 6+g.
inline hqg::CayleyTable m12_table() {
    const auto g = s3_rows();
    std::vector<Element> inv(6);
    for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y)
            if (g[x][y] == 0) inv[x] = y;
    std::vector<std::vector<Element>> rows(12, std::vector<Element>(12));
    for (Element a = 0; a < 12; ++a)
        for (Element b = 0; b < 12; ++b) {
            const Element x = a % 6, y = b % 6;
            if (a < 6 && b < 6) rows[a][b] = g[x][y];
            if (a < 6 && b >= 6) rows[a][b] = 6 + g[y][x];
            if (a >= 6 && b < 6) rows[a][b] = 6 + g[x][inv[y]];
            if (a >= 6 && b >= 6) rows[a][b] = g[inv[y]][x];
        }
    return hqg::CayleyTable::from_rows(rows, "M(S3,2)");
}

/// The two-element monoid {1, z} with z z = z.
inline hqg::CayleyTable idempotent_table() { return hqg::CayleyTable::from_rows({{0, 1}, {1, 1}}, "idempotent"); }

inline bool associative(const std::vector<std::vector<Element>>& t) {
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[a][t[b][c]] != t[t[a][b]][c]) return false;
    return true;
}

// Backtracking search for an IP loop with a prescribed inverse involution;
// each placed product u*v = w forces inv(u)*w = v and w*inv(v) = u.
inline std::optional<std::vector<std::vector<Element>>> search_ip_loop(Element n, const std::vector<Element>& inv,
                                   const std::function<bool(const std::vector<std::vector<Element>>&)>& accept) {
    constexpr Element empty = ~Element{0};
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n, empty));
    std::optional<std::vector<std::vector<Element>>> hit;
    std::function<bool(Element, Element, Element, std::vector<std::pair<Element, Element>>&)> place =
        [&](Element u, Element v, Element w, std::vector<std::pair<Element, Element>>& trail) -> bool {
        if (t[u][v] != empty) return t[u][v] == w;
        for (Element k = 0; k < n; ++k)
            if (t[u][k] == w || t[k][v] == w) return false;
        t[u][v] = w;
        trail.emplace_back(u, v);
        return place(inv[u], w, v, trail) && place(w, inv[v], u, trail);
    };
    std::function<bool()> search = [&]() -> bool {
        for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
                if (t[u][v] != empty) continue;
                for (Element w = 0; w < n; ++w) {
                    std::vector<std::pair<Element, Element>> trail;
                    if (place(u, v, w, trail) && search()) return true;
                    for (auto [a, b] : trail) t[a][b] = empty;
                }
                return false;
            }
        if (accept(t)) {
            hit = t;
            return true;
        }
        return false;
    };
    std::vector<std::pair<Element, Element>> trail;
    for (Element x = 0; x < n; ++x)
        if (!place(0, x, x, trail) || !place(x, 0, x, trail) || !place(x, inv[x], 0, trail)) return std::nullopt;
    search();
    return hit;
}

inline bool oracle_associative(const std::vector<std::vector<Element>>& t) {
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[a][t[b][c]] != t[t[a][b]][c]) return false;
    return true;
}

/// The first nonassociative IP loop of order 7 with inverse (1 2)(3 4)(5 6)
/// met by the search above.
inline std::vector<std::vector<Element>> nonassociative_ip_loop_rows() {
    return *search_ip_loop(7, {0, 2, 1, 4, 3, 6, 5}, [](const auto& t) { return !associative(t); });
}

}  // namespace fixtures

#endif
