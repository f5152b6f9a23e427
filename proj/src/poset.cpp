#include "phl/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace phl {

namespace {

// Group element as flags: reverse h, reverse r, then exchange the orders.
struct TransformFlags {
    bool rev_h;
    bool rev_r;
    bool swap;
};

TransformFlags flags_of(Transform t) {
    switch (t) {
        case Transform::Id: return {false, false, false};
        case Transform::Alpha: return {true, false, false};
        case Transform::Beta: return {false, true, false};
        case Transform::Gamma: return {true, true, false};
        case Transform::Iota: return {false, false, true};
        case Transform::IotaAlpha: return {true, false, true};
        case Transform::IotaBeta: return {false, true, true};
        case Transform::IotaGamma: return {true, true, true};
    }
    throw std::invalid_argument("flags_of: bad transform");
}

Transform of_flags(TransformFlags f) {
    int rev = (f.rev_h ? 1 : 0) + (f.rev_r ? 2 : 0);
    static constexpr Transform plain[4] = {Transform::Id, Transform::Alpha, Transform::Beta,
                                           Transform::Gamma};
    static constexpr Transform swapped[4] = {Transform::Iota, Transform::IotaAlpha,
                                             Transform::IotaBeta, Transform::IotaGamma};
    return f.swap ? swapped[rev] : plain[rev];
}

} // namespace

Transform compose(Transform outer, Transform inner) {
    // Write g = s^a m with m the reversal pair; s m = m' s where m' swaps the
    // two reversal flags. Then (s^a1 m1)(s^a2 m2) = s^(a1 xor a2) (m1' m2)
    // with m1' = m1 swapped iff a2.
    TransformFlags f1 = flags_of(outer), f2 = flags_of(inner);
    TransformFlags r;
    r.swap = f1.swap != f2.swap;
    bool h1 = f1.rev_h, r1 = f1.rev_r;
    if (f2.swap) std::swap(h1, r1);
    r.rev_h = h1 != f2.rev_h;
    r.rev_r = r1 != f2.rev_r;
    return of_flags(r);
}

const char* transform_name(Transform t) {
    switch (t) {
        case Transform::Id: return "id";
        case Transform::Alpha: return "alpha";
        case Transform::Beta: return "beta";
        case Transform::Gamma: return "gamma";
        case Transform::Iota: return "iota";
        case Transform::IotaAlpha: return "iota.alpha";
        case Transform::IotaBeta: return "iota.beta";
        case Transform::IotaGamma: return "iota.gamma";
    }
    throw std::invalid_argument("transform_name: bad transform");
}

RelationKind PlanePoset::rel(int i, int j) const {
    if (i < 1 || i > size() || j < 1 || j > size())
        throw std::out_of_range("PlanePoset::rel: element out of range");
    if (i == j) return RelationKind::EQUAL;
    bool pos_less = i < j;
    bool val_less = code_(i) < code_(j);
    if (pos_less) return val_less ? RelationKind::H_LESS : RelationKind::R_LESS;
    return val_less ? RelationKind::R_GREATER : RelationKind::H_GREATER;
}

PairStats PlanePoset::stat(Subset x, Subset y) const {
    PairStats s;
    for (int i = 1; i <= size(); ++i) {
        if (!(x & (Subset{1} << (i - 1)))) continue;
        for (int j = 1; j <= size(); ++j) {
            if (!(y & (Subset{1} << (j - 1)))) continue;
            switch (rel(i, j)) {
                case RelationKind::EQUAL:
                    ++s.h;
                    ++s.r;
                    break;
                case RelationKind::H_LESS: ++s.h; break;
                case RelationKind::R_LESS: ++s.r; break;
                default: break;
            }
        }
    }
    return s;
}

PlanePoset PlanePoset::restrict(Subset keep) const {
    std::vector<int> letters;
    for (int i = 1; i <= size(); ++i)
        if (keep & (Subset{1} << (i - 1))) letters.push_back(code_(i));
    return PlanePoset(Permutation::standardize(letters));
}

IdealFlags PlanePoset::ideal_kind(Subset subset) const {
    IdealFlags f{true, true, true};
    for (int i = 1; i <= size(); ++i) {
        if (!(subset & (Subset{1} << (i - 1)))) continue;
        for (int j = 1; j <= size(); ++j) {
            if (subset & (Subset{1} << (j - 1))) continue;
            RelationKind r = rel(i, j);
            if (r == RelationKind::H_LESS) f.h_ideal = false;
            if (r == RelationKind::R_LESS) f.r_ideal = false;
        }
    }
    f.biideal = f.h_ideal && f.r_ideal;
    return f;
}

std::vector<PlanePoset> PlanePoset::h_components() const {
    // A cut after position j is valid iff the first j values are exactly the
    // top block {n-j+1..n}, i.e. every cross pair is r-related.
    std::vector<PlanePoset> parts;
    int n = size();
    int start = 1;
    int min_seen = n + 1;
    for (int j = 1; j <= n; ++j) {
        min_seen = std::min(min_seen, code_(j));
        if (min_seen == n - j + 1) {
            Subset block = 0;
            for (int i = start; i <= j; ++i) block |= Subset{1} << (i - 1);
            parts.push_back(restrict(block));
            start = j + 1;
            min_seen = n + 1;
        }
    }
    return parts;
}

std::vector<PlanePoset> PlanePoset::r_components() const {
    // Dual cut: first j values are exactly the bottom block {1..j}.
    std::vector<PlanePoset> parts;
    int n = size();
    int start = 1;
    int max_seen = 0;
    for (int j = 1; j <= n; ++j) {
        max_seen = std::max(max_seen, code_(j));
        if (max_seen == j) {
            Subset block = 0;
            for (int i = start; i <= j; ++i) block |= Subset{1} << (i - 1);
            parts.push_back(restrict(block));
            start = j + 1;
            max_seen = 0;
        }
    }
    return parts;
}

PlanePoset PlanePoset::concat(const PlanePoset& p, const PlanePoset& q) {
    int m = p.size(), n = q.size();
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m + n));
    for (int i = 1; i <= m; ++i) w.push_back(p.code_(i) + n);
    for (int j = 1; j <= n; ++j) w.push_back(q.code_(j));
    return PlanePoset(Permutation(std::move(w)));
}

PlanePoset PlanePoset::over(const PlanePoset& p, const PlanePoset& q) {
    int m = p.size(), n = q.size();
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m + n));
    for (int i = 1; i <= m; ++i) w.push_back(p.code_(i));
    for (int j = 1; j <= n; ++j) w.push_back(q.code_(j) + m);
    return PlanePoset(Permutation(std::move(w)));
}

PlanePoset PlanePoset::transform(Transform t) const {
    TransformFlags f = flags_of(t);
    int n = size();
    // Strict relation tables after applying the flags.
    auto strict = [&](int i, int j, bool of_h) {
        RelationKind r = rel(i, j);
        return of_h ? r == RelationKind::H_LESS : r == RelationKind::R_LESS;
    };
    auto less_h = [&](int i, int j) {
        bool v = f.swap ? strict(i, j, false) : strict(i, j, true);
        bool reversed = f.swap ? f.rev_r : f.rev_h;
        return reversed ? (f.swap ? strict(j, i, false) : strict(j, i, true)) : v;
    };
    auto less_r = [&](int i, int j) {
        bool v = f.swap ? strict(i, j, true) : strict(i, j, false);
        bool reversed = f.swap ? f.rev_h : f.rev_r;
        return reversed ? (f.swap ? strict(j, i, true) : strict(j, i, false)) : v;
    };
    // Total order of the transformed structure, then relabel along it.
    std::vector<int> elems(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) elems[static_cast<std::size_t>(i)] = i + 1;
    std::sort(elems.begin(), elems.end(),
              [&](int a, int b) { return less_h(a, b) || less_r(a, b); });
    // rank[e] = new label of old element e.
    std::vector<int> rank(static_cast<std::size_t>(n) + 1);
    for (int pos = 0; pos < n; ++pos) rank[static_cast<std::size_t>(elems[static_cast<std::size_t>(pos)])] = pos + 1;
    // New code word: sigma(i') < sigma(j') iff i' <_h j' for i' < j'.
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        int e = elems[static_cast<std::size_t>(pos)];
        int below = 0;
        for (int other = 1; other <= n; ++other) {
            if (other == e) continue;
            int po = rank[static_cast<std::size_t>(other)];
            // sigma(other) < sigma(e) iff (other before e and other <_h e)
            // or (e before other and e <_r other).
            if ((po < pos + 1 && less_h(other, e)) || (po > pos + 1 && less_r(e, other))) ++below;
        }
        w[static_cast<std::size_t>(pos)] = below + 1;
    }
    return PlanePoset(Permutation(std::move(w)));
}

long PlanePoset::h_total() const {
    long total = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if (rel(i, j) == RelationKind::H_LESS) ++total;
    return total;
}

long PlanePoset::r_total() const {
    long total = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if (rel(i, j) == RelationKind::R_LESS) ++total;
    return total;
}

bool PlanePoset::contains_pattern(const PlanePoset& pattern) const {
    int n = size(), k = pattern.size();
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    // Enumerate k-subsets of positions via the first combination 0..k-1.
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> letters;
        letters.reserve(static_cast<std::size_t>(k));
        for (int i : idx) letters.push_back(code_(i + 1));
        if (Permutation::standardize(letters) == pattern.code()) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
    }
    return false;
}

Classification PlanePoset::classify() const {
    Classification c;
    c.is_forest = !contains_pattern(forest_forbidden_pattern());
    c.is_wn = true;
    for (const auto& pat : wn_forbidden_patterns())
        if (contains_pattern(pat)) c.is_wn = false;
    return c;
}

std::vector<Permutation> PlanePoset::linear_extensions() const {
    int n = size();
    std::vector<Permutation> result;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    Subset used = 0;
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == n) {
            result.push_back(Permutation(word));
            return;
        }
        for (int e = 1; e <= n; ++e) {
            if (used & (Subset{1} << (e - 1))) continue;
            bool ready = true;
            for (int b = 1; b <= n && ready; ++b)
                if (!(used & (Subset{1} << (b - 1))) && b != e && rel(b, e) == RelationKind::H_LESS)
                    ready = false;
            if (!ready) continue;
            used |= Subset{1} << (e - 1);
            word.push_back(e);
            self(self);
            word.pop_back();
            used &= ~(Subset{1} << (e - 1));
        }
    };
    recurse(recurse);
    return result;
}

std::string PlanePoset::to_string() const { return "p:" + code_.to_string(); }

bool lex_less(const PlanePoset& p, const PlanePoset& q) {
    if (p.size() != q.size()) return p.size() < q.size();
    return p.code().word() < q.code().word();
}

const std::vector<PlanePoset>& enumerate_posets(int n) {
    static std::map<int, std::vector<PlanePoset>> cache;
    static std::mutex mutex;
    if (n < 0 || n > 10) throw std::invalid_argument("enumerate_posets: n out of range [0,10]");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PlanePoset> result;
    for (const auto& sigma : Permutation::all(n)) result.push_back(PlanePoset(sigma));
    return cache.emplace(n, std::move(result)).first->second;
}

Subset full_subset(int n) { return n == 0 ? 0 : (Subset{1} << n) - 1; }

int subset_size(Subset s) { return std::popcount(s); }

std::vector<int> subset_elements(Subset s) {
    std::vector<int> elems;
    for (int i = 1; s; ++i, s >>= 1)
        if (s & 1) elems.push_back(i);
    return elems;
}

const std::vector<PlanePoset>& wn_forbidden_patterns() {
    static const std::vector<PlanePoset> patterns = [] {
        // Scan degree 4 for posets whose strict h relation is a zigzag path:
        // h-connected, exactly three h pairs, nobody h-comparable to three
        // others. Chains have six pairs, stars have a degree-3 element, and
        // single-cover paths with a monotone stretch gain a transitive pair,
        // so exactly the two zigzags survive.
        std::vector<PlanePoset> found;
        for (const auto& p : enumerate_posets(4)) {
            if (p.h_total() != 3) continue;
            if (p.h_components().size() != 1) continue;
            bool degree_ok = true;
            for (int i = 1; i <= 4 && degree_ok; ++i) {
                int deg = 0;
                for (int j = 1; j <= 4; ++j) {
                    if (i == j) continue;
                    RelationKind r = p.rel(i, j);
                    if (r == RelationKind::H_LESS || r == RelationKind::H_GREATER) ++deg;
                }
                if (deg > 2) degree_ok = false;
            }
            if (degree_ok) found.push_back(p);
        }
        if (found.size() != 2)
            throw std::logic_error("wn_forbidden_patterns: expected exactly two zigzag posets");
        return found;
    }();
    return patterns;
}

const PlanePoset& forest_forbidden_pattern() {
    static const PlanePoset pattern{Permutation({2, 1, 3})};
    return pattern;
}

} // namespace phl
