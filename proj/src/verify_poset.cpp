#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "phl/verify.hpp"
#include "verify_util.hpp"

namespace phl {

namespace {

using detail::posets_up_to;

std::string where(const PlanePoset& p) { return p.to_string(); }

// --- Counting and canonical-form checks ------------------------------------

std::string check_count_matches_factorial(int max_degree) {
    int bound = std::min(max_degree, 6);
    for (int n = 0; n <= bound; ++n) {
        const auto& all = enumerate_posets(n);
        if (all.size() != factorial(n)) {
            std::ostringstream out;
            out << "degree " << n << ": enumerated " << all.size() << " posets, expected "
                << factorial(n);
            return out.str();
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (PlanePoset::from_perm(all[i].code()) != all[i])
                return "code round trip failed at " + where(all[i]);
            if (i > 0 && !lex_less(all[i - 1], all[i]))
                return "enumeration order broken at " + where(all[i]);
        }
    }
    return "";
}

std::string check_relation_consistency(int max_degree) {
    int bound = std::min(max_degree, 5);
    for (const auto& p : posets_up_to(bound)) {
        int n = p.size();
        for (int i = 1; i <= n; ++i) {
            if (p.rel(i, i) != RelationKind::EQUAL)
                return "rel(i,i) not EQUAL at " + where(p);
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                RelationKind r = p.rel(i, j), back = p.rel(j, i);
                bool flipped =
                    (r == RelationKind::H_LESS && back == RelationKind::H_GREATER) ||
                    (r == RelationKind::H_GREATER && back == RelationKind::H_LESS) ||
                    (r == RelationKind::R_LESS && back == RelationKind::R_GREATER) ||
                    (r == RelationKind::R_GREATER && back == RelationKind::R_LESS);
                if (!flipped) return "rel not antisymmetric at " + where(p);
                if (i < j) {
                    // The union of the orders is the usual total order, and the
                    // code rule picks h exactly when the code values increase.
                    bool code_h = p.code()(i) < p.code()(j);
                    RelationKind expect =
                        code_h ? RelationKind::H_LESS : RelationKind::R_LESS;
                    if (r != expect) return "code rule broken at " + where(p);
                }
            }
        }
    }
    return "";
}

// Over disjoint subsets the four crossed counts partition X x Y.
std::string check_stat_counts(int max_degree) {
    int bound = std::min(max_degree, 4);
    for (const auto& p : posets_up_to(bound)) {
        int n = p.size();
        Subset full = full_subset(n);
        for (Subset x = 0; x <= full; ++x) {
            for (Subset y = 0; y <= full; ++y) {
                if (x & y) continue;
                PairStats xy = p.stat(x, y), yx = p.stat(y, x);
                long total = xy.h + yx.h + xy.r + yx.r;
                long expect = static_cast<long>(subset_size(x)) * subset_size(y);
                if (total != expect) {
                    std::ostringstream out;
                    out << "crossed counts sum to " << total << " instead of " << expect
                        << " at " << where(p);
                    return out.str();
                }
            }
        }
        // Reflexive pairs count on both sides.
        for (int i = 1; i <= n; ++i) {
            Subset s = Subset{1} << (i - 1);
            PairStats d = p.stat(s, s);
            if (d.h != 1 || d.r != 1) return "reflexive stat convention broken at " + where(p);
        }
    }
    return "";
}

std::string check_ideal_flags_match_stats(int max_degree) {
    int bound = std::min(max_degree, 5);
    for (const auto& p : posets_up_to(bound)) {
        Subset full = full_subset(p.size());
        for (Subset s = 0; s <= full; ++s) {
            Subset comp = full & ~s;
            IdealFlags f = p.ideal_kind(s);
            PairStats out_of_s = p.stat(s, comp);
            bool h_expect = out_of_s.h == 0;
            bool r_expect = out_of_s.r == 0;
            if (f.h_ideal != h_expect || f.r_ideal != r_expect ||
                f.biideal != (h_expect && r_expect)) {
                std::ostringstream msg;
                msg << "ideal flags disagree with crossed counts at " << where(p)
                    << " subset mask " << s;
                return msg.str();
            }
        }
    }
    return "";
}

std::string check_components_factorization(int max_degree) {
    int bound = std::min(max_degree, 6);
    for (const auto& p : posets_up_to(bound)) {
        auto hs = p.h_components();
        PlanePoset glued;
        for (const auto& part : hs) {
            if (part.h_components().size() != 1)
                return "h component not irreducible at " + where(p);
            glued = PlanePoset::concat(glued, part);
        }
        if (glued != p) return "h components do not concatenate back to " + where(p);
        auto rs = p.r_components();
        PlanePoset stacked;
        for (const auto& part : rs) {
            if (part.r_components().size() != 1)
                return "r component not irreducible at " + where(p);
            stacked = PlanePoset::over(stacked, part);
        }
        if (stacked != p) return "r components do not stack back to " + where(p);
    }
    // Components of a product are the concatenated component lists.
    int pair_bound = std::min(max_degree, 5);
    for (int a = 1; a < pair_bound; ++a) {
        for (int b = 1; a + b <= pair_bound; ++b) {
            for (const auto& p : enumerate_posets(a)) {
                for (const auto& q : enumerate_posets(b)) {
                    auto joined = PlanePoset::concat(p, q).h_components();
                    auto expect = p.h_components();
                    auto more = q.h_components();
                    expect.insert(expect.end(), more.begin(), more.end());
                    if (joined != expect)
                        return "concat components broken at " + where(p) + ", " + where(q);
                    auto stacked = PlanePoset::over(p, q).r_components();
                    auto expect_r = p.r_components();
                    auto more_r = q.r_components();
                    expect_r.insert(expect_r.end(), more_r.begin(), more_r.end());
                    if (stacked != expect_r)
                        return "over components broken at " + where(p) + ", " + where(q);
                }
            }
        }
    }
    return "";
}

// --- Symmetries -------------------------------------------------------------

// Independent model of the symmetry group: signed exchanges of the two order
// axes, composed by 2x2 signed-permutation matrix product.
using AxisMatrix = std::array<std::array<int, 2>, 2>;

AxisMatrix axis_matrix(Transform t) {
    auto diag = [](int a, int b) { return AxisMatrix{{{a, 0}, {0, b}}}; };
    auto swap_then = [](AxisMatrix d) {
        return AxisMatrix{{{d[1][0], d[1][1]}, {d[0][0], d[0][1]}}};
    };
    switch (t) {
        case Transform::Id: return diag(1, 1);
        case Transform::Alpha: return diag(-1, 1);
        case Transform::Beta: return diag(1, -1);
        case Transform::Gamma: return diag(-1, -1);
        case Transform::Iota: return swap_then(diag(1, 1));
        case Transform::IotaAlpha: return swap_then(diag(-1, 1));
        case Transform::IotaBeta: return swap_then(diag(1, -1));
        case Transform::IotaGamma: return swap_then(diag(-1, -1));
    }
    return diag(1, 1);
}

AxisMatrix multiply(const AxisMatrix& a, const AxisMatrix& b) {
    AxisMatrix m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

std::string check_symmetry_group_table(int max_degree) {
    const std::array<Transform, 8> all = {
        Transform::Id,        Transform::Alpha,    Transform::Beta,
        Transform::Gamma,     Transform::Iota,     Transform::IotaAlpha,
        Transform::IotaBeta,  Transform::IotaGamma};
    for (Transform a : all) {
        for (Transform b : all) {
            AxisMatrix expect = multiply(axis_matrix(a), axis_matrix(b));
            AxisMatrix got = axis_matrix(compose(a, b));
            if (got != expect)
                return std::string("composition table disagrees with the axis model at ") +
                       transform_name(a) + " after " + transform_name(b);
        }
    }
    // The action realizes the table: applying b then a equals the composite.
    int bound = std::min(max_degree, 4);
    for (const auto& p : posets_up_to(bound)) {
        for (Transform a : all) {
            for (Transform b : all) {
                if (p.transform(b).transform(a) != p.transform(compose(a, b)))
                    return std::string("action is not compatible with composition at ") +
                           where(p) + " for " + transform_name(a) + " after " +
                           transform_name(b);
            }
        }
    }
    return "";
}

std::string check_transform_action_properties(int max_degree) {
    int bound = std::min(max_degree, 4);
    const std::array<Transform, 8> all = {
        Transform::Id,        Transform::Alpha,    Transform::Beta,
        Transform::Gamma,     Transform::Iota,     Transform::IotaAlpha,
        Transform::IotaBeta,  Transform::IotaGamma};
    for (int n = 1; n <= bound; ++n) {
        for (Transform t : all) {
            std::set<PlanePoset> image;
            bool swaps = t == Transform::Iota || t == Transform::IotaAlpha ||
                         t == Transform::IotaBeta || t == Transform::IotaGamma;
            for (const auto& p : enumerate_posets(n)) {
                PlanePoset q = p.transform(t);
                if (q.size() != n) return "transform changed the degree at " + where(p);
                long h_expect = swaps ? p.r_total() : p.h_total();
                long r_expect = swaps ? p.h_total() : p.r_total();
                if (q.h_total() != h_expect || q.r_total() != r_expect)
                    return std::string("pair totals wrong under ") + transform_name(t) +
                           " at " + where(p);
                image.insert(q);
            }
            if (static_cast<Int>(image.size()) != factorial(n))
                return std::string(transform_name(t)) + " is not a bijection in degree " +
                       std::to_string(n);
        }
    }
    // Pinned small images.
    auto psi = [](std::vector<int> w) { return PlanePoset(Permutation(std::move(w))); };
    struct Example {
        Transform t;
        std::vector<int> input, expect;
    };
    const std::vector<Example> pinned = {
        {Transform::Iota, {1, 2}, {2, 1}},       {Transform::Iota, {2, 1}, {1, 2}},
        {Transform::Alpha, {1, 2}, {1, 2}},      {Transform::Alpha, {2, 3, 1}, {2, 3, 1}},
        {Transform::Alpha, {1, 3, 2}, {2, 1, 3}}, {Transform::Beta, {2, 3, 1}, {3, 1, 2}},
        {Transform::Beta, {2, 1, 3}, {2, 1, 3}}, {Transform::Gamma, {1, 3, 2}, {2, 1, 3}},
        {Transform::Alpha, {2, 4, 1, 3}, {3, 1, 4, 2}},
    };
    for (const auto& ex : pinned) {
        PlanePoset got = psi(ex.input).transform(ex.t);
        if (got != psi(ex.expect))
            return std::string("pinned image wrong: ") + transform_name(ex.t) + " of " +
                   psi(ex.input).to_string() + " gave " + got.to_string();
    }
    return "";
}

// --- Patterns, classes, restriction ----------------------------------------

std::string check_pattern_classes(int max_degree) {
    // Forbidden patterns have the pinned codes and symmetry behaviour.
    const auto& wn = wn_forbidden_patterns();
    if (wn.size() != 2) return "expected exactly two crossing patterns";
    std::set<std::vector<int>> words{wn[0].code().word(), wn[1].code().word()};
    std::set<std::vector<int>> expect{{2, 4, 1, 3}, {3, 1, 4, 2}};
    if (words != expect) return "crossing patterns have unexpected codes";
    for (const auto& p : wn) {
        if (p.transform(Transform::Gamma) != p) return "crossing pattern not gamma fixed";
        if (p.transform(Transform::Iota) == p) return "crossing pattern iota fixed";
    }
    if (forest_forbidden_pattern().code().word() != std::vector<int>{2, 1, 3})
        return "forest pattern has unexpected code";

    // Class counts: forests follow the Catalan recurrence, the crossing-free
    // class excludes exactly the two patterns in degree 4.
    int bound = std::min(max_degree, 5);
    std::vector<Int> catalan{Int(1)};
    for (int n = 1; n <= bound; ++n) {
        Int c = 0;
        for (int i = 0; i < n; ++i) c += catalan[i] * catalan[n - 1 - i];
        catalan.push_back(c);
    }
    for (int n = 0; n <= bound; ++n) {
        Int forests = 0, crossing_free = 0;
        for (const auto& p : enumerate_posets(n)) {
            Classification c = p.classify();
            if (c.is_forest) ++forests;
            if (c.is_wn) ++crossing_free;
            if (c.is_forest && !c.is_wn) return "forest classified as crossing at " + where(p);
        }
        if (forests != catalan[n])
            return "forest count in degree " + std::to_string(n) + " is " + forests.str() +
                   ", expected " + catalan[n].str();
        Int wn_expect = factorial(n);
        if (n == 4) wn_expect -= 2;
        if (n >= 5) continue; // counts only pinned through degree 4
        if (crossing_free != wn_expect)
            return "crossing-free count in degree " + std::to_string(n) + " is " +
                   crossing_free.str() + ", expected " + wn_expect.str();
    }

    // Class invariance under symmetries.
    int sym_bound = std::min(max_degree, 4);
    const std::array<Transform, 8> all = {
        Transform::Id,        Transform::Alpha,    Transform::Beta,
        Transform::Gamma,     Transform::Iota,     Transform::IotaAlpha,
        Transform::IotaBeta,  Transform::IotaGamma};
    for (const auto& p : posets_up_to(sym_bound)) {
        Classification c = p.classify();
        for (Transform t : all)
            if (p.transform(t).classify().is_wn != c.is_wn)
                return std::string("crossing-free class not invariant under ") +
                       transform_name(t) + " at " + where(p);
        if (p.transform(Transform::Beta).classify().is_forest != c.is_forest)
            return "forest class not invariant under the r reversal at " + where(p);
    }
    return "";
}

std::string check_restriction_properties(int max_degree) {
    int bound = std::min(max_degree, 4);
    for (const auto& p : posets_up_to(bound)) {
        int n = p.size();
        Subset full = full_subset(n);
        if (p.restrict(full) != p) return "restriction to all elements changed " + where(p);
        if (p.restrict(0).size() != 0) return "restriction to nothing not empty";
        for (Subset a = 0; a <= full; ++a) {
            PlanePoset pa = p.restrict(a);
            if (pa.size() != subset_size(a)) return "restriction size wrong at " + where(p);
            // Restricting in two steps agrees with one step.
            auto elems = subset_elements(a);
            for (Subset inner = 0; inner < (Subset{1} << elems.size()); ++inner) {
                Subset direct = 0;
                for (std::size_t k = 0; k < elems.size(); ++k)
                    if (inner & (Subset{1} << k)) direct |= Subset{1} << (elems[k] - 1);
                if (pa.restrict(inner) != p.restrict(direct))
                    return "two-step restriction disagrees at " + where(p);
            }
        }
    }
    return "";
}

std::string check_linear_extension_validity(int max_degree) {
    int bound = std::min(max_degree, 5);
    for (const auto& p : posets_up_to(bound)) {
        int n = p.size();
        std::vector<Permutation> brute;
        for (const auto& w : Permutation::all(n)) {
            Permutation pos = w.inverse();
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i)
                for (int j = 1; j <= n && ok; ++j)
                    if (p.rel(i, j) == RelationKind::H_LESS && pos(i) > pos(j)) ok = false;
            if (ok) brute.push_back(w);
        }
        if (p.linear_extensions() != brute)
            return "linear extensions disagree with the brute filter at " + where(p);
    }
    // A chain admits one listing, an antichain all of them.
    for (int n = 1; n <= bound; ++n) {
        std::vector<int> up(static_cast<std::size_t>(n)), down(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            up[static_cast<std::size_t>(i)] = i + 1;
            down[static_cast<std::size_t>(i)] = n - i;
        }
        if (PlanePoset(Permutation(up)).linear_extensions().size() != 1)
            return "h chain should have one listing";
        if (static_cast<Int>(PlanePoset(Permutation(down)).linear_extensions().size()) !=
            factorial(n))
            return "r chain should admit every listing";
    }
    return "";
}

} // namespace

std::vector<Check> poset_checks() {
    return {
        {"poset_count_matches_factorial", check_count_matches_factorial},
        {"poset_relation_consistency", check_relation_consistency},
        {"poset_stat_counts", check_stat_counts},
        {"poset_ideal_flags_match_stats", check_ideal_flags_match_stats},
        {"poset_components_factorization", check_components_factorization},
        {"poset_symmetry_group_table", check_symmetry_group_table},
        {"poset_transform_action_properties", check_transform_action_properties},
        {"poset_pattern_classes", check_pattern_classes},
        {"poset_restriction_properties", check_restriction_properties},
        {"poset_linear_extension_validity", check_linear_extension_validity},
    };
}

} // namespace phl
