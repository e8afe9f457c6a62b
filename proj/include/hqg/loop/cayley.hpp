// Finite magmas with identity given by Cayley tables, and the set-level
// quasigroup/loop properties checked on them.

#ifndef HQG_LOOP_CAYLEY_HPP
#define HQG_LOOP_CAYLEY_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hqg/report.hpp"

namespace hqg {

using Element = std::uint32_t;
using Permutation = std::vector<Element>;

/// A finite magma with two-sided identity, relabelled so the identity is 0.
class CayleyTable {
   public:
    /// `rows[i][j]` is the product of i and j. Throws IndexOutOfRange for
    /// entries outside 0..n-1 and NoIdentity when no two-sided identity exists.
    /// When the identity is some e != 0, the labels 0 and e are swapped.
    static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows, std::string name = {});

    std::size_t order() const { return n_; }
    Element operator()(Element a, Element b) const { return table_[a * n_ + b]; }
    Element identity() const { return 0; }
    const std::string& name() const { return name_; }
    std::vector<std::vector<Element>> rows() const;

    /// The table after relabelling every element x as sigma[x].
    CayleyTable relabelled(const Permutation& sigma) const;

    friend bool operator==(const CayleyTable& a, const CayleyTable& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

   private:
    CayleyTable(std::size_t n, std::vector<Element> t, std::string name)
        : n_(n), table_(std::move(t)), name_(std::move(name)) {}

    std::size_t n_ = 0;
    std::vector<Element> table_;
    std::string name_;
};

/// Reads either the text form ("order n" followed by n rows) or the structured
/// form ({"order", "table", "name"}). Throws FormatError, IndexOutOfRange or
/// NoIdentity.
CayleyTable parse_cayley(std::string_view source);
CayleyTable read_cayley_file(const std::string& path);

/// Canonical structured serialization (one table row per line).
std::string emit_cayley(const CayleyTable& t);

enum class LoopIdentity { flexible, alternative, moufang, associative };
std::string_view to_string(LoopIdentity id);
LoopIdentity parse_loop_identity(std::string_view s);

struct IdentityVerdict {
    bool holds = true;
    std::vector<Element> witness;  // first failing tuple, lexicographic
};

struct LoopReport {
    bool latin = false;
    bool has_identity = false;
    bool ip = false;
    std::optional<Permutation> inverse;  // present iff ip
    std::optional<bool> flexible, alternative, moufang, associative;

    // Counterexamples for failed properties.
    std::optional<Witness> latin_witness;
    std::optional<Witness> ip_witness;
    std::vector<std::pair<LoopIdentity, std::vector<Element>>> identity_witnesses;

    Report to_report() const;
};

/// latin, has_identity and ip (with its inverse permutation).
LoopReport check_quasigroup(const CayleyTable& t);

/// check_quasigroup plus every loop identity when the table is a loop.
LoopReport full_loop_report(const CayleyTable& t);

/// Throws NotALoop unless the table is a Latin square with identity.
IdentityVerdict check_loop_identity(const CayleyTable& t, LoopIdentity mode);

enum class GaloisSide { T1, T2 };
std::string_view to_string(GaloisSide s);
GaloisSide parse_galois_side(std::string_view s);

/// T1: (g,h) -> (g,gh); T2: (g,h) -> (gh,h). True iff the map is a bijection
/// of G x G.
bool set_galois_bijective(const CayleyTable& t, GaloisSide which);

/// Chein double M(G,2) on G ∪ Gu, with g at index g and gu at index n+g:
///   (g)(h) = gh, (g)(hu) = (hg)u, (gu)(h) = (gh^-1)u, (gu)(hu) = h^-1 g.
/// Throws NotAGroup unless g is an associative loop.
CayleyTable chein_double(const CayleyTable& g);

/// Named tables: "c<n>" (cyclic, 1 <= n <= 64), "s<k>" (symmetric group on
/// k <= 5 points, permutations in lexicographic order, (ab)(i) = a(b(i))) and
/// "idempotent" ({1, z} with zz = z). Throws FormatError for other names.
CayleyTable builtin_table(std::string_view name);

enum class AutomorphismSearch { automatic, exhaustive, backtracking };

/// All loop automorphisms, sorted lexicographically. `automatic` uses the
/// exhaustive scan up to order 8 and backtracking above. Throws NotALoop.
std::vector<Permutation> loop_automorphisms(const CayleyTable& t,
                                            AutomorphismSearch strategy = AutomorphismSearch::automatic);

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);

}  // namespace hqg

#endif
