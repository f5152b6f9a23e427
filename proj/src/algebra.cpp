#include "phl/algebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace phl {

DeformParams DeformParams::generic() {
    return {QPoly::variable(Var::Q1), QPoly::variable(Var::Q2), QPoly::variable(Var::Q3),
            QPoly::variable(Var::Q4)};
}

DeformParams DeformParams::of(QPoly a, QPoly b, QPoly c, QPoly d) {
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

QPoly DeformParams::weight(const std::array<int, 4>& exps) const {
    // Fast path: generic slots give a plain monomial.
    QPoly w = QPoly::one();
    const QPoly* slots[4] = {&s1, &s2, &s3, &s4};
    Monomial mono;
    bool all_vars = true;
    for (int k = 0; k < 4 && all_vars; ++k) {
        const QPoly& s = *slots[k];
        if (s.term_count() == 1 && s.terms().begin()->second == 1) {
            Monomial m = s.terms().begin()->first;
            for (int rep = 0; rep < exps[static_cast<std::size_t>(k)]; ++rep) mono = mono * m;
        } else {
            all_vars = false;
        }
    }
    if (all_vars) return QPoly::monomial(mono, Int(1));
    for (int k = 0; k < 4; ++k)
        w *= slots[k]->pow(static_cast<std::uint32_t>(exps[static_cast<std::size_t>(k)]));
    return w;
}

namespace {

// Cross-pair statistics of a split of R into complement(I) and I, slot order.
std::array<int, 4> split_stats(const PlanePoset& r, Subset inner) {
    std::array<int, 4> e{0, 0, 0, 0};
    int n = r.size();
    for (int i = 1; i <= n; ++i) {
        bool i_in = inner & (Subset{1} << (i - 1));
        for (int j = i + 1; j <= n; ++j) {
            bool j_in = inner & (Subset{1} << (j - 1));
            if (i_in == j_in) continue;
            RelationKind rel = r.rel(i, j);
            bool h = rel == RelationKind::H_LESS || rel == RelationKind::H_GREATER;
            // Orient the pair from the element outside I to the element inside.
            int lo = i, hi = j;
            bool lo_in = i_in;
            if (h ? rel == RelationKind::H_GREATER : rel == RelationKind::R_GREATER) {
                std::swap(lo, hi);
                lo_in = j_in;
            }
            // Now lo <_x hi. Slots: outer-below-inner (1/3), inner-below-outer (2/4).
            if (h)
                ++e[lo_in ? 1 : 0];
            else
                ++e[lo_in ? 3 : 2];
        }
    }
    return e;
}

using GluingKey = std::pair<std::vector<int>, std::vector<int>>;

} // namespace

const std::vector<GluingTerm>& product_gluings(const PlanePoset& p, const PlanePoset& q) {
    static std::map<GluingKey, std::vector<GluingTerm>> cache;
    static std::mutex mutex;
    GluingKey key{p.code().word(), q.code().word()};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int m = p.size(), n = q.size();
    std::vector<GluingTerm> terms;
    for (const auto& r : enumerate_posets(m + n)) {
        // Iterate size-n subsets of {1..m+n} as bitmasks.
        Subset full = full_subset(m + n);
        Subset inner = full_subset(n);
        while (true) {
            if (r.restrict(full & ~inner) == p && r.restrict(inner) == q)
                terms.push_back({r, inner, split_stats(r, inner)});
            if (n == 0) break;
            // Gosper's hack: next bitmask with the same popcount.
            Subset c = inner & (0 - inner);
            Subset rr = inner + c;
            inner = (((rr ^ inner) >> 2) / c) | rr;
            if (inner > full) break;
        }
    }
    return cache.emplace(std::move(key), std::move(terms)).first->second;
}

PosetCombo product_q(const PosetCombo& x, const PosetCombo& y, const DeformParams& params) {
    PosetCombo result;
    for (const auto& [p, cp] : x.terms()) {
        for (const auto& [q, cq] : y.terms()) {
            QPoly scale = cp * cq;
            for (const auto& g : product_gluings(p, q))
                result.add(g.whole, scale * params.weight(g.exps));
        }
    }
    return result;
}

TensorCombo coproduct_q(const PosetCombo& x, const DeformParams& params) {
    TensorCombo result;
    for (const auto& [p, c] : x.terms()) {
        Subset full = full_subset(p.size());
        for (Subset inner = 0;; ++inner) {
            auto stats = split_stats(p, inner);
            result.add({p.restrict(full & ~inner), p.restrict(inner)},
                       c * params.weight(stats));
            if (inner == full) break;
        }
    }
    return result;
}

QPoly counit(const PosetCombo& x) { return x.coefficient(PlanePoset()); }

PosetCombo concat_product(const PosetCombo& x, const PosetCombo& y) {
    PosetCombo result;
    for (const auto& [p, cp] : x.terms())
        for (const auto& [q, cq] : y.terms()) result.add(PlanePoset::concat(p, q), cp * cq);
    return result;
}

PosetCombo over_product(const PosetCombo& x, const PosetCombo& y) {
    PosetCombo result;
    for (const auto& [p, cp] : x.terms())
        for (const auto& [q, cq] : y.terms()) result.add(PlanePoset::over(p, q), cp * cq);
    return result;
}

TensorCombo braid(const TensorCombo& x, const QPoly& base) {
    TensorCombo result;
    for (const auto& [pq, c] : x.terms()) {
        auto exponent = static_cast<std::uint32_t>(pq.first.size() * pq.second.size());
        result.add({pq.second, pq.first}, c * base.pow(exponent));
    }
    return result;
}

PosetCombo apply_transform(const PosetCombo& x, Transform t) {
    PosetCombo result;
    for (const auto& [p, c] : x.terms()) result.add(p.transform(t), c);
    return result;
}

TensorCombo apply_transform(const TensorCombo& x, Transform t) {
    TensorCombo result;
    for (const auto& [pq, c] : x.terms())
        result.add({pq.first.transform(t), pq.second.transform(t)}, c);
    return result;
}

TensorCombo swap_factors(const TensorCombo& x) {
    TensorCombo result;
    for (const auto& [pq, c] : x.terms()) result.add({pq.second, pq.first}, c);
    return result;
}

TensorCombo tensor(const PosetCombo& x, const PosetCombo& y) {
    TensorCombo result;
    for (const auto& [p, cp] : x.terms())
        for (const auto& [q, cq] : y.terms()) result.add({p, q}, cp * cq);
    return result;
}

PosetCombo h_weight_rescale(const PosetCombo& x, const QPoly& base) {
    PosetCombo result;
    for (const auto& [p, c] : x.terms())
        result.add(p, c * base.pow(static_cast<std::uint32_t>(p.h_total())));
    return result;
}

PosetCombo r_weight_rescale(const PosetCombo& x, const QPoly& base) {
    PosetCombo result;
    for (const auto& [p, c] : x.terms())
        result.add(p, c * base.pow(static_cast<std::uint32_t>(p.r_total())));
    return result;
}

} // namespace phl
