#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "phl/perm.hpp"

namespace phl {

// A plane poset: a double poset (P, <=_h, <=_r) on {1..n} in which two distinct
// elements are h-comparable exactly when they are not r-comparable, so the
// union of the two orders is a total order. Canonical form: the elements are
// relabeled along that total order and the structure is stored as its encoding
// permutation sigma, where for positions i < j
//     i <_h j  iff  sigma(i) < sigma(j),
//     i <_r j  iff  sigma(i) > sigma(j).
// Equality, hashing and the enumeration order are word comparisons on sigma.

enum class RelationKind { H_LESS, H_GREATER, R_LESS, R_GREATER, EQUAL };

// One of the eight order symmetries: exchange of the two orders (iota),
// reversal of the h order (alpha), of the r order (beta), of both (gamma),
// and the four composites with iota. They form a dihedral group of order 8.
enum class Transform {
    Id,
    Alpha,
    Beta,
    Gamma,
    Iota,
    IotaAlpha,
    IotaBeta,
    IotaGamma,
};

Transform compose(Transform outer, Transform inner);
const char* transform_name(Transform t);

// Subset of {1..n} as a bitmask: element i <-> bit (i-1).
using Subset = std::uint32_t;

struct IdealFlags {
    bool h_ideal = false;
    bool r_ideal = false;
    bool biideal = false;
};

struct PairStats {
    long h = 0; // #{(x,y) in X x Y : x <=_h y}
    long r = 0; // #{(x,y) in X x Y : x <=_r y}
};

struct Classification {
    bool is_forest = false;
    bool is_wn = false;
};

class PlanePoset {
public:
    // The empty poset.
    PlanePoset() = default;
    explicit PlanePoset(Permutation code) : code_(std::move(code)) {}

    static PlanePoset from_perm(const Permutation& sigma) { return PlanePoset(sigma); }
    const Permutation& to_perm() const { return code_; }
    const Permutation& code() const { return code_; }

    int size() const { return code_.size(); }

    // Relation between elements i and j (1-based).
    RelationKind rel(int i, int j) const;

    // Non-strict pair counts between subsets; shared elements contribute to
    // both counts through reflexivity.
    PairStats stat(Subset x, Subset y) const;

    // Induced plane subposet on a subset, relabeled canonically.
    PlanePoset restrict(Subset keep) const;

    IdealFlags ideal_kind(Subset subset) const;

    // Finest factorizations: under composition all cross pairs r-related
    // (h_components, the factors of the concatenation product) or h-related
    // (r_components, the factors of the over product).
    std::vector<PlanePoset> h_components() const;
    std::vector<PlanePoset> r_components() const;

    // Products: disjoint union with every cross pair p <_r q (concat) or
    // p <_h q (over), p in the left factor, q in the right.
    static PlanePoset concat(const PlanePoset& p, const PlanePoset& q);
    static PlanePoset over(const PlanePoset& p, const PlanePoset& q);

    PlanePoset transform(Transform t) const;

    // Strict pair totals; h_total + r_total = n(n-1)/2.
    long h_total() const;
    long r_total() const;

    // True if some induced subposet equals pattern.
    bool contains_pattern(const PlanePoset& pattern) const;

    Classification classify() const;

    // All words listing the elements so that x <_h y implies x listed before y,
    // as permutations (position -> element), in lexicographic order.
    std::vector<Permutation> linear_extensions() const;

    std::strong_ordering operator<=>(const PlanePoset& o) const = default;

    // Text form "p:<word>".
    std::string to_string() const;

private:
    Permutation code_;
};

// Degree-then-code order used for enumeration and matrix indexing.
bool lex_less(const PlanePoset& p, const PlanePoset& q);

// All plane posets of degree n in code-lexicographic order; memoized.
const std::vector<PlanePoset>& enumerate_posets(int n);

// Subset helpers.
Subset full_subset(int n);
int subset_size(Subset s);
std::vector<int> subset_elements(Subset s);

// The two forbidden degree-4 patterns whose avoidance defines the WN class:
// the posets whose strict h relation is a 4-element zigzag (two minimal and
// two maximal elements, three covering pairs). Derived by scanning degree 4.
const std::vector<PlanePoset>& wn_forbidden_patterns();

// The degree-3 pattern whose avoidance defines plane forests.
const PlanePoset& forest_forbidden_pattern();

} // namespace phl
