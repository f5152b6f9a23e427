#include <array>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phl/algebra.hpp"
#include "phl/verify.hpp"
#include "verify_util.hpp"

namespace phl {

namespace {

using detail::inline_text;
using detail::mismatch;
using detail::posets_up_to;

QPoly q1() { return QPoly::variable(Var::Q1); }
QPoly q2() { return QPoly::variable(Var::Q2); }
QPoly q3() { return QPoly::variable(Var::Q3); }
QPoly q4() { return QPoly::variable(Var::Q4); }
QPoly tv() { return QPoly::variable(Var::T); }

PlanePoset psi(std::vector<int> w) { return PlanePoset(Permutation(std::move(w))); }

// Local coproduct cache shared by one check invocation.
class DeltaCache {
public:
    const TensorCombo& of(const PlanePoset& p) {
        auto it = cache_.find(p);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(p, coproduct_q(PosetCombo(p))).first->second;
    }

private:
    std::map<PlanePoset, TensorCombo> cache_;
};

// --- Frozen degree-2 and degree-3 expansion tables --------------------------

std::string check_product_tables(int) {
    struct Entry {
        std::vector<int> left, right;
        std::vector<std::pair<std::vector<int>, QPoly>> expect;
    };
    const QPoly deg2_h = q1() * q1() + q1() * q2() + q2() * q2();
    const QPoly deg2_r = q3() * q3() + q3() * q4() + q4() * q4();
    const std::vector<Entry> tables = {
        {{1},
         {1},
         {{{2, 1}, q3() + q4()}, {{1, 2}, q1() + q2()}}},
        {{1},
         {1, 2},
         {{{3, 1, 2}, q3() * q3()},
          {{2, 3, 1}, q4() * q4()},
          {{1, 3, 2}, q2() * (q3() + q4())},
          {{2, 1, 3}, q1() * (q3() + q4())},
          {{1, 2, 3}, deg2_h}}},
        {{1},
         {2, 1},
         {{{1, 3, 2}, q1() * q1()},
          {{2, 1, 3}, q2() * q2()},
          {{3, 1, 2}, (q1() + q2()) * q4()},
          {{2, 3, 1}, (q1() + q2()) * q3()},
          {{3, 2, 1}, deg2_r}}},
        {{1, 2},
         {1},
         {{{3, 1, 2}, q4() * q4()},
          {{2, 3, 1}, q3() * q3()},
          {{1, 3, 2}, q1() * (q3() + q4())},
          {{2, 1, 3}, q2() * (q3() + q4())},
          {{1, 2, 3}, deg2_h}}},
        {{2, 1},
         {1},
         {{{1, 3, 2}, q2() * q2()},
          {{2, 1, 3}, q1() * q1()},
          {{3, 1, 2}, (q1() + q2()) * q3()},
          {{2, 3, 1}, (q1() + q2()) * q4()},
          {{3, 2, 1}, deg2_r}}},
    };
    for (const auto& t : tables) {
        PosetCombo expect;
        for (const auto& [word, coeff] : t.expect) expect.add(psi(word), coeff);
        PosetCombo got = product_q(PosetCombo(psi(t.left)), PosetCombo(psi(t.right)));
        if (got != expect)
            return mismatch("product of " + psi(t.left).to_string() + " and " +
                                psi(t.right).to_string(),
                            got, expect);
    }
    return "";
}

std::string check_coproduct_tables(int) {
    struct Entry {
        std::vector<int> input;
        std::vector<std::pair<std::pair<std::vector<int>, std::vector<int>>, QPoly>> reduced;
    };
    const std::vector<int> one{1}, ht{1, 2}, rt{2, 1};
    const QPoly deg2_h = q1() * q1() + q1() * q2() + q2() * q2();
    const QPoly deg2_r = q3() * q3() + q3() * q4() + q4() * q4();
    const std::vector<Entry> tables = {
        {{1, 2}, {{{one, one}, q1() + q2()}}},
        {{2, 1}, {{{one, one}, q3() + q4()}}},
        {{1, 2, 3}, {{{one, ht}, deg2_h}, {{ht, one}, deg2_h}}},
        {{1, 3, 2},
         {{{one, ht}, q2() * (q3() + q4())},
          {{ht, one}, q1() * (q3() + q4())},
          {{one, rt}, q1() * q1()},
          {{rt, one}, q2() * q2()}}},
        {{2, 1, 3},
         {{{one, ht}, q1() * (q3() + q4())},
          {{ht, one}, q2() * (q3() + q4())},
          {{one, rt}, q2() * q2()},
          {{rt, one}, q1() * q1()}}},
        {{2, 3, 1},
         {{{one, ht}, q4() * q4()},
          {{ht, one}, q3() * q3()},
          {{one, rt}, (q1() + q2()) * q3()},
          {{rt, one}, (q1() + q2()) * q4()}}},
        {{3, 1, 2},
         {{{one, ht}, q3() * q3()},
          {{ht, one}, q4() * q4()},
          {{one, rt}, (q1() + q2()) * q4()},
          {{rt, one}, (q1() + q2()) * q3()}}},
        {{3, 2, 1}, {{{one, rt}, deg2_r}, {{rt, one}, deg2_r}}},
    };
    for (const auto& t : tables) {
        PlanePoset p = psi(t.input);
        TensorCombo expect;
        expect.add({p, PlanePoset()}, QPoly::one());
        expect.add({PlanePoset(), p}, QPoly::one());
        for (const auto& [pair, coeff] : t.reduced)
            expect.add({psi(pair.first), psi(pair.second)}, coeff);
        TensorCombo got = coproduct_q(PosetCombo(p));
        if (got != expect) return mismatch("coproduct of " + p.to_string(), got, expect);
    }
    return "";
}

// --- Associativity, coassociativity, duality --------------------------------

std::string check_product_associativity(int max_degree) {
    int bound = std::min(max_degree, 5);
    auto test = [](const PlanePoset& a, const PlanePoset& b, const PlanePoset& c) {
        PosetCombo lhs = product_q(product_q(PosetCombo(a), PosetCombo(b)), PosetCombo(c));
        PosetCombo rhs = product_q(PosetCombo(a), product_q(PosetCombo(b), PosetCombo(c)));
        if (lhs == rhs) return std::string();
        return mismatch("associativity at " + a.to_string() + ", " + b.to_string() + ", " +
                            c.to_string(),
                        lhs, rhs);
    };
    for (int na = 1; na <= bound - 2; ++na)
        for (int nb = 1; na + nb <= bound - 1; ++nb)
            for (int nc = 1; na + nb + nc <= bound; ++nc)
                for (const auto& a : enumerate_posets(na))
                    for (const auto& b : enumerate_posets(nb))
                        for (const auto& c : enumerate_posets(nc))
                            if (auto err = test(a, b, c); !err.empty()) return err;
    if (max_degree >= 6) {
        // Seeded random triples of total degree 6.
        std::vector<std::array<int, 3>> shapes;
        for (int na = 1; na <= 4; ++na)
            for (int nb = 1; na + nb <= 5; ++nb) shapes.push_back({na, nb, 6 - na - nb});
        std::mt19937 rng(424242u);
        for (int iter = 0; iter < 50; ++iter) {
            auto shape = shapes[rng() % shapes.size()];
            const auto& as = enumerate_posets(shape[0]);
            const auto& bs = enumerate_posets(shape[1]);
            const auto& cs = enumerate_posets(shape[2]);
            if (auto err = test(as[rng() % as.size()], bs[rng() % bs.size()],
                                cs[rng() % cs.size()]);
                !err.empty())
                return err;
        }
    }
    return "";
}

std::string check_coproduct_coassociativity(int max_degree) {
    int bound = std::min(max_degree, 6);
    DeltaCache delta;
    using Triple = std::array<PlanePoset, 3>;
    auto add = [](std::map<Triple, QPoly>& m, Triple k, const QPoly& v) {
        auto [it, fresh] = m.emplace(std::move(k), v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    for (const auto& p : posets_up_to(bound)) {
        std::map<Triple, QPoly> lhs, rhs;
        for (const auto& [ab, c] : delta.of(p).terms()) {
            for (const auto& [a12, d] : delta.of(ab.first).terms())
                add(lhs, {a12.first, a12.second, ab.second}, c * d);
            for (const auto& [b12, d] : delta.of(ab.second).terms())
                add(rhs, {ab.first, b12.first, b12.second}, c * d);
        }
        if (lhs != rhs) return "coassociativity broken at " + p.to_string();
    }
    return "";
}

std::string check_product_coproduct_duality(int max_degree) {
    int bound = std::min(max_degree, 5);
    DeltaCache delta;
    for (int total = 2; total <= bound; ++total) {
        // Every product coefficient appears as the matching coproduct one.
        for (int a = 1; a < total; ++a) {
            for (const auto& p : enumerate_posets(a)) {
                for (const auto& q : enumerate_posets(total - a)) {
                    PosetCombo prod = product_q(PosetCombo(p), PosetCombo(q));
                    for (const auto& [r, c] : prod.terms()) {
                        if (delta.of(r).coefficient({p, q}) != c)
                            return "structure constants not transposed at " + p.to_string() +
                                   ", " + q.to_string() + " -> " + r.to_string();
                    }
                }
            }
        }
        // And conversely.
        for (const auto& r : enumerate_posets(total)) {
            for (const auto& [ab, c] : delta.of(r).terms()) {
                if (ab.first.size() == 0 || ab.second.size() == 0) continue;
                PosetCombo prod = product_q(PosetCombo(ab.first), PosetCombo(ab.second));
                if (prod.coefficient(r) != c)
                    return "structure constants not transposed at " + r.to_string() +
                           " -> " + ab.first.to_string() + ", " + ab.second.to_string();
            }
        }
    }
    return "";
}

// --- Specializations of the product ----------------------------------------

std::string check_product_specializations(int max_degree) {
    int bound = std::min(max_degree, 6);
    for (int a = 1; a < bound; ++a) {
        for (int b = 1; a + b <= bound; ++b) {
            for (const auto& p : enumerate_posets(a)) {
                for (const auto& q : enumerate_posets(b)) {
                    PosetCombo xp(p), xq(q);
                    auto size_scale = tv().pow(static_cast<std::uint32_t>(a * b));
                    struct Case {
                        DeformParams params;
                        PosetCombo expect;
                        const char* label;
                    };
                    const QPoly zero = QPoly::zero(), one = QPoly::one();
                    std::vector<Case> cases;
                    cases.push_back({DeformParams::of(one, zero, zero, zero),
                                     PosetCombo(PlanePoset::over(p, q)), "over"});
                    cases.push_back({DeformParams::of(zero, one, zero, zero),
                                     PosetCombo(PlanePoset::over(q, p)), "over opposite"});
                    cases.push_back({DeformParams::of(zero, zero, one, zero),
                                     PosetCombo(PlanePoset::concat(p, q)), "concat"});
                    cases.push_back({DeformParams::of(zero, zero, zero, one),
                                     PosetCombo(PlanePoset::concat(q, p)), "concat opposite"});
                    cases.push_back({DeformParams::of(tv(), zero, zero, zero),
                                     PosetCombo(PlanePoset::over(p, q), size_scale),
                                     "scaled over"});
                    cases.push_back({DeformParams::of(zero, zero, tv(), zero),
                                     PosetCombo(PlanePoset::concat(p, q), size_scale),
                                     "scaled concat"});
                    for (const auto& c : cases) {
                        PosetCombo got = product_q(xp, xq, c.params);
                        if (got != c.expect)
                            return mismatch(std::string(c.label) + " specialization at " +
                                                p.to_string() + ", " + q.to_string(),
                                            got, c.expect);
                    }
                }
            }
        }
    }
    return "";
}

// --- Specializations of the coproduct ---------------------------------------

std::string check_coproduct_classical_point(int max_degree) {
    int bound = std::min(max_degree, 5);
    auto params = DeformParams::of(QPoly::one(), QPoly::zero(), QPoly::one(), QPoly::one());
    for (const auto& p : posets_up_to(bound)) {
        // Classical coproduct: h-up-closed subsets carry the right factor.
        TensorCombo expect;
        Subset full = full_subset(p.size());
        for (Subset inner = 0;; ++inner) {
            if (p.ideal_kind(inner).h_ideal)
                expect.add({p.restrict(full & ~inner), p.restrict(inner)}, QPoly::one());
            if (inner == full) break;
        }
        TensorCombo got = coproduct_q(PosetCombo(p), params);
        if (got != expect) return mismatch("classical coproduct at " + p.to_string(), got, expect);
    }
    return "";
}

std::string check_coproduct_special_slices(int max_degree) {
    int bound = std::min(max_degree, 5);
    const QPoly zero = QPoly::zero();
    for (const auto& p : posets_up_to(bound)) {
        int n = p.size();
        Subset full = full_subset(n);
        // Eight slice payloads accumulated in one subset sweep.
        TensorCombo diagonal, h_keep_left, h_keep_right, r_keep_left, r_keep_right,
            bi_keep_left, bi_keep_right, primitive;
        for (Subset i = 0;; ++i) {
            Subset comp = full & ~i;
            PlanePoset inner = p.restrict(i), outer = p.restrict(comp);
            PairStats from_outer = p.stat(comp, i), from_inner = p.stat(i, comp);
            long cross = static_cast<long>(subset_size(i)) * subset_size(comp);

            Monomial diag;
            diag.e[static_cast<std::size_t>(Var::T)] = static_cast<std::uint32_t>(cross);
            diagonal.add({outer, inner}, QPoly::monomial(diag, Int(1)));

            auto weight = [](std::initializer_list<std::pair<Var, long>> exps) {
                Monomial m;
                for (auto [v, e] : exps)
                    m.e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(e);
                return QPoly::monomial(m, Int(1));
            };
            if (from_inner.h == 0) {
                // I h-up-closed: the two slices killing one h weight.
                h_keep_right.add({outer, inner}, weight({{Var::Q1, from_outer.h},
                                                         {Var::Q4, from_inner.r},
                                                         {Var::Q3, from_outer.r}}));
            }
            if (from_outer.h == 0) {
                h_keep_left.add({outer, inner}, weight({{Var::Q2, from_inner.h},
                                                        {Var::Q3, from_outer.r},
                                                        {Var::Q4, from_inner.r}}));
            }
            if (from_inner.r == 0) {
                r_keep_right.add({outer, inner}, weight({{Var::Q2, from_inner.h},
                                                         {Var::Q1, from_outer.h},
                                                         {Var::Q3, from_outer.r}}));
            }
            if (from_outer.r == 0) {
                r_keep_left.add({outer, inner}, weight({{Var::Q1, from_outer.h},
                                                        {Var::Q2, from_inner.h},
                                                        {Var::Q4, from_inner.r}}));
            }
            if (from_inner.h == 0 && from_inner.r == 0) {
                bi_keep_right.add({outer, inner},
                                  weight({{Var::Q1, from_outer.h}, {Var::Q3, from_outer.r}}));
            }
            if (from_outer.h == 0 && from_outer.r == 0) {
                bi_keep_left.add({outer, inner},
                                 weight({{Var::Q2, from_inner.h}, {Var::Q4, from_inner.r}}));
            }
            if (cross == 0) primitive.add({outer, inner}, QPoly::one());
            if (i == full) break;
        }
        struct Case {
            DeformParams params;
            const TensorCombo* expect;
            const char* label;
        };
        const std::vector<Case> cases = {
            {DeformParams::of(tv(), tv(), tv(), tv()), &diagonal, "diagonal"},
            {DeformParams::of(q1(), zero, q3(), q4()), &h_keep_right, "h slice right"},
            {DeformParams::of(zero, q2(), q3(), q4()), &h_keep_left, "h slice left"},
            {DeformParams::of(q1(), q2(), q3(), zero), &r_keep_right, "r slice right"},
            {DeformParams::of(q1(), q2(), zero, q4()), &r_keep_left, "r slice left"},
            {DeformParams::of(q1(), zero, q3(), zero), &bi_keep_right, "bi slice right"},
            {DeformParams::of(zero, q2(), zero, q4()), &bi_keep_left, "bi slice left"},
            {DeformParams::of(zero, zero, zero, zero), &primitive, "all zero"},
        };
        for (const auto& c : cases) {
            TensorCombo got = coproduct_q(PosetCombo(p), c.params);
            if (got != *c.expect)
                return mismatch(std::string(c.label) + " coproduct slice at " + p.to_string(),
                                got, *c.expect);
        }
    }
    return "";
}

std::string check_coproduct_deconcatenation_slices(int max_degree) {
    int bound = std::min(max_degree, 6);
    const QPoly zero = QPoly::zero();
    auto fold_over = [](const std::vector<PlanePoset>& parts, std::size_t from,
                        std::size_t to) {
        PlanePoset out;
        for (std::size_t k = from; k < to; ++k) out = PlanePoset::over(out, parts[k]);
        return out;
    };
    auto fold_concat = [](const std::vector<PlanePoset>& parts, std::size_t from,
                          std::size_t to) {
        PlanePoset out;
        for (std::size_t k = from; k < to; ++k) out = PlanePoset::concat(out, parts[k]);
        return out;
    };
    for (const auto& p : posets_up_to(bound)) {
        auto rc = p.r_components();
        TensorCombo over_fwd, over_rev;
        for (std::size_t cut = 0; cut <= rc.size(); ++cut) {
            PlanePoset lo = fold_over(rc, 0, cut), hi = fold_over(rc, cut, rc.size());
            auto w = tv().pow(static_cast<std::uint32_t>(lo.size() * hi.size()));
            over_fwd.add({lo, hi}, w);
            over_rev.add({hi, lo}, w);
        }
        auto hc = p.h_components();
        TensorCombo concat_fwd, concat_rev;
        for (std::size_t cut = 0; cut <= hc.size(); ++cut) {
            PlanePoset left = fold_concat(hc, 0, cut), right = fold_concat(hc, cut, hc.size());
            auto w = tv().pow(static_cast<std::uint32_t>(left.size() * right.size()));
            concat_fwd.add({left, right}, w);
            concat_rev.add({right, left}, w);
        }
        struct Case {
            DeformParams params;
            const TensorCombo* expect;
            const char* label;
        };
        const std::vector<Case> cases = {
            {DeformParams::of(tv(), zero, zero, zero), &over_fwd, "over splits"},
            {DeformParams::of(zero, tv(), zero, zero), &over_rev, "over splits reversed"},
            {DeformParams::of(zero, zero, tv(), zero), &concat_fwd, "concat splits"},
            {DeformParams::of(zero, zero, zero, tv()), &concat_rev, "concat splits reversed"},
        };
        for (const auto& c : cases) {
            TensorCombo got = coproduct_q(PosetCombo(p), c.params);
            if (got != *c.expect)
                return mismatch(std::string(c.label) + " coproduct at " + p.to_string(), got,
                                *c.expect);
        }
    }
    return "";
}

std::string check_coproduct_component_slices(int max_degree) {
    int bound = std::min(max_degree, 5);
    const QPoly zero = QPoly::zero();
    for (const auto& p : posets_up_to(bound)) {
        auto build = [](const std::vector<PlanePoset>& parts, bool use_concat, Var in_var,
                        Var out_var) {
            TensorCombo expect;
            std::size_t k = parts.size();
            for (Subset pick = 0; pick < (Subset{1} << k); ++pick) {
                PlanePoset taken, rest;
                long in_weight = 0, out_weight = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    bool in_i = pick & (Subset{1} << i);
                    for (std::size_t j = i + 1; j < k; ++j) {
                        bool in_j = pick & (Subset{1} << j);
                        if (in_i == in_j) continue;
                        long cross = static_cast<long>(parts[i].size()) * parts[j].size();
                        (in_i ? in_weight : out_weight) += cross;
                    }
                    PlanePoset& target = in_i ? taken : rest;
                    target = use_concat ? PlanePoset::concat(target, parts[i])
                                        : PlanePoset::over(target, parts[i]);
                }
                Monomial m;
                m.e[static_cast<std::size_t>(in_var)] = static_cast<std::uint32_t>(in_weight);
                m.e[static_cast<std::size_t>(out_var)] = static_cast<std::uint32_t>(out_weight);
                expect.add({taken, rest}, QPoly::monomial(m, Int(1)));
            }
            return expect;
        };
        TensorCombo concat_expect = build(p.h_components(), true, Var::Q3, Var::Q4);
        TensorCombo got = coproduct_q(PosetCombo(p), DeformParams::of(zero, zero, q3(), q4()));
        if (got != concat_expect)
            return mismatch("h component coproduct slice at " + p.to_string(), got,
                            concat_expect);
        TensorCombo over_expect = build(p.r_components(), false, Var::Q1, Var::Q2);
        TensorCombo got_over =
            coproduct_q(PosetCombo(p), DeformParams::of(q1(), q2(), zero, zero));
        if (got_over != over_expect)
            return mismatch("r component coproduct slice at " + p.to_string(), got_over,
                            over_expect);
    }
    return "";
}

// --- Shuffle form of the degenerate products --------------------------------

std::string check_product_shuffle_slice(int max_degree) {
    int bound = std::min(max_degree, 6);
    const QPoly zero = QPoly::zero();
    auto oracle = [](const std::vector<PlanePoset>& a, const std::vector<PlanePoset>& b,
                     bool use_over, Var below_var, Var above_var) {
        std::size_t k = a.size(), l = b.size();
        std::vector<PlanePoset> parts = a;
        parts.insert(parts.end(), b.begin(), b.end());
        PosetCombo out;
        // Choose the positions of the left-factor components.
        for (Subset mask = 0; mask < (Subset{1} << (k + l)); ++mask) {
            if (static_cast<std::size_t>(subset_size(mask)) != k) continue;
            // seq[pos] = component index placed at pos.
            std::vector<std::size_t> seq(k + l);
            std::size_t next_a = 0, next_b = k;
            for (std::size_t pos = 0; pos < k + l; ++pos)
                seq[pos] = (mask & (Subset{1} << pos)) ? next_a++ : next_b++;
            std::vector<std::size_t> pos_of(k + l);
            for (std::size_t pos = 0; pos < k + l; ++pos) pos_of[seq[pos]] = pos;
            long below = 0, above = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = k; j < k + l; ++j) {
                    long cross = static_cast<long>(parts[i].size()) * parts[j].size();
                    (pos_of[i] < pos_of[j] ? below : above) += cross;
                }
            PlanePoset fold;
            for (std::size_t pos = 0; pos < k + l; ++pos)
                fold = use_over ? PlanePoset::over(fold, parts[seq[pos]])
                                : PlanePoset::concat(fold, parts[seq[pos]]);
            Monomial m;
            m.e[static_cast<std::size_t>(below_var)] = static_cast<std::uint32_t>(below);
            m.e[static_cast<std::size_t>(above_var)] = static_cast<std::uint32_t>(above);
            out.add(fold, QPoly::monomial(m, Int(1)));
        }
        return out;
    };
    for (int na = 1; na < bound; ++na) {
        for (int nb = 1; na + nb <= bound; ++nb) {
            for (const auto& p : enumerate_posets(na)) {
                for (const auto& q : enumerate_posets(nb)) {
                    PosetCombo expect_over =
                        oracle(p.r_components(), q.r_components(), true, Var::Q1, Var::Q2);
                    PosetCombo got_over = product_q(PosetCombo(p), PosetCombo(q),
                                                    DeformParams::of(q1(), q2(), zero, zero));
                    if (got_over != expect_over)
                        return mismatch("component shuffle (over) at " + p.to_string() + ", " +
                                            q.to_string(),
                                        got_over, expect_over);
                    PosetCombo expect_concat =
                        oracle(p.h_components(), q.h_components(), false, Var::Q3, Var::Q4);
                    PosetCombo got_concat = product_q(PosetCombo(p), PosetCombo(q),
                                                      DeformParams::of(zero, zero, q3(), q4()));
                    if (got_concat != expect_concat)
                        return mismatch("component shuffle (concat) at " + p.to_string() +
                                            ", " + q.to_string(),
                                        got_concat, expect_concat);
                }
            }
        }
    }
    return "";
}

// --- Symmetry reparametrizations --------------------------------------------

DeformParams swapped_params(std::array<Var, 4> order) {
    return DeformParams::of(QPoly::variable(order[0]), QPoly::variable(order[1]),
                            QPoly::variable(order[2]), QPoly::variable(order[3]));
}

std::string check_product_symmetry_reparametrizations(int max_degree) {
    int bound = std::min(max_degree, 5);
    struct Line {
        Transform t;
        std::array<Var, 4> params;
    };
    const std::vector<Line> lines = {
        {Transform::Iota, {Var::Q3, Var::Q4, Var::Q1, Var::Q2}},
        {Transform::Alpha, {Var::Q2, Var::Q1, Var::Q3, Var::Q4}},
        {Transform::Beta, {Var::Q1, Var::Q2, Var::Q4, Var::Q3}},
        {Transform::Gamma, {Var::Q2, Var::Q1, Var::Q4, Var::Q3}},
    };
    for (int na = 1; na < bound; ++na) {
        for (int nb = 1; na + nb <= bound; ++nb) {
            for (const auto& p : enumerate_posets(na)) {
                for (const auto& q : enumerate_posets(nb)) {
                    PosetCombo xp(p), xq(q);
                    // Opposite product.
                    PosetCombo opp = product_q(xq, xp);
                    PosetCombo reparam = product_q(
                        xp, xq, swapped_params({Var::Q2, Var::Q1, Var::Q4, Var::Q3}));
                    if (opp != reparam)
                        return mismatch("opposite product reparametrization at " +
                                            p.to_string() + ", " + q.to_string(),
                                        opp, reparam);
                    for (const auto& line : lines) {
                        PosetCombo lhs = apply_transform(
                            product_q(apply_transform(xp, line.t), apply_transform(xq, line.t)),
                            line.t);
                        PosetCombo rhs = product_q(xp, xq, swapped_params(line.params));
                        if (lhs != rhs)
                            return mismatch(std::string("product conjugated by ") +
                                                transform_name(line.t) + " at " +
                                                p.to_string() + ", " + q.to_string(),
                                            lhs, rhs);
                    }
                }
            }
        }
    }
    return "";
}

std::string check_coproduct_symmetry_reparametrizations(int max_degree) {
    int bound = std::min(max_degree, 5);
    struct Line {
        Transform t;
        std::array<Var, 4> params;
    };
    const std::vector<Line> lines = {
        {Transform::Iota, {Var::Q3, Var::Q4, Var::Q1, Var::Q2}},
        {Transform::Alpha, {Var::Q2, Var::Q1, Var::Q3, Var::Q4}},
        {Transform::Beta, {Var::Q1, Var::Q2, Var::Q4, Var::Q3}},
        {Transform::Gamma, {Var::Q2, Var::Q1, Var::Q4, Var::Q3}},
    };
    for (const auto& p : posets_up_to(bound)) {
        PosetCombo xp(p);
        TensorCombo opp = swap_factors(coproduct_q(xp));
        TensorCombo reparam =
            coproduct_q(xp, swapped_params({Var::Q2, Var::Q1, Var::Q4, Var::Q3}));
        if (opp != reparam)
            return mismatch("opposite coproduct reparametrization at " + p.to_string(), opp,
                            reparam);
        for (const auto& line : lines) {
            TensorCombo lhs = apply_transform(coproduct_q(xp), line.t);
            TensorCombo rhs =
                coproduct_q(apply_transform(xp, line.t), swapped_params(line.params));
            if (lhs != rhs)
                return mismatch(std::string("coproduct conjugated by ") +
                                    transform_name(line.t) + " at " + p.to_string(),
                                lhs, rhs);
        }
    }
    return "";
}

// --- Compatibilities between coproduct and the two products ------------------

std::string check_coproduct_product_compatibility(int max_degree) {
    int bound = std::min(max_degree, 5);
    DeltaCache delta;
    for (int na = 1; na < bound; ++na) {
        for (int nb = 1; na + nb <= bound; ++nb) {
            for (const auto& p : enumerate_posets(na)) {
                for (const auto& q : enumerate_posets(nb)) {
                    TensorCombo expect_concat, expect_over;
                    for (const auto& [xs, cx] : delta.of(p).terms()) {
                        for (const auto& [ys, cy] : delta.of(q).terms()) {
                            Monomial m;
                            m.e[static_cast<std::size_t>(Var::Q3)] = static_cast<std::uint32_t>(
                                xs.first.size() * ys.second.size());
                            m.e[static_cast<std::size_t>(Var::Q4)] = static_cast<std::uint32_t>(
                                xs.second.size() * ys.first.size());
                            expect_concat.add({PlanePoset::concat(xs.first, ys.first),
                                               PlanePoset::concat(xs.second, ys.second)},
                                              cx * cy * QPoly::monomial(m, Int(1)));
                            Monomial mo;
                            mo.e[static_cast<std::size_t>(Var::Q1)] =
                                static_cast<std::uint32_t>(xs.first.size() * ys.second.size());
                            mo.e[static_cast<std::size_t>(Var::Q2)] =
                                static_cast<std::uint32_t>(xs.second.size() * ys.first.size());
                            expect_over.add({PlanePoset::over(xs.first, ys.first),
                                             PlanePoset::over(xs.second, ys.second)},
                                            cx * cy * QPoly::monomial(mo, Int(1)));
                        }
                    }
                    TensorCombo got_concat = coproduct_q(PosetCombo(PlanePoset::concat(p, q)));
                    if (got_concat != expect_concat)
                        return mismatch("concat compatibility at " + p.to_string() + ", " +
                                            q.to_string(),
                                        got_concat, expect_concat);
                    TensorCombo got_over = coproduct_q(PosetCombo(PlanePoset::over(p, q)));
                    if (got_over != expect_over)
                        return mismatch("over compatibility at " + p.to_string() + ", " +
                                            q.to_string(),
                                        got_over, expect_over);
                }
            }
        }
    }
    return "";
}

std::string check_coproduct_concat_hopf_forms(int max_degree) {
    int bound = std::min(max_degree, 5);
    const QPoly zero = QPoly::zero(), one = QPoly::one();
    auto sweedler = DeformParams::of(q1(), q2(), one, one);
    auto inf = DeformParams::of(q1(), q2(), one, zero);
    auto braided = DeformParams::of(q1(), q2(), one, q4());
    for (int na = 1; na < bound; ++na) {
        for (int nb = 1; na + nb <= bound; ++nb) {
            for (const auto& p : enumerate_posets(na)) {
                for (const auto& q : enumerate_posets(nb)) {
                    PlanePoset pq = PlanePoset::concat(p, q);
                    TensorCombo dp = coproduct_q(PosetCombo(p), sweedler);
                    TensorCombo dq = coproduct_q(PosetCombo(q), sweedler);
                    // Plain Sweedler multiplicativity at unit concat weights.
                    TensorCombo expect;
                    for (const auto& [xs, cx] : dp.terms())
                        for (const auto& [ys, cy] : dq.terms())
                            expect.add({PlanePoset::concat(xs.first, ys.first),
                                        PlanePoset::concat(xs.second, ys.second)},
                                       cx * cy);
                    TensorCombo got = coproduct_q(PosetCombo(pq), sweedler);
                    if (got != expect)
                        return mismatch("bialgebra form at " + p.to_string() + ", " +
                                            q.to_string(),
                                        got, expect);
                    // Braided form: weight carried by braiding the middle pair.
                    TensorCombo dpb = coproduct_q(PosetCombo(p), braided);
                    TensorCombo dqb = coproduct_q(PosetCombo(q), braided);
                    TensorCombo expect_braided;
                    for (const auto& [xs, cx] : dpb.terms()) {
                        for (const auto& [ys, cy] : dqb.terms()) {
                            TensorCombo middle = braid(TensorCombo({xs.second, ys.first}, cx * cy));
                            for (const auto& [mid, cm] : middle.terms())
                                expect_braided.add({PlanePoset::concat(xs.first, mid.first),
                                                    PlanePoset::concat(mid.second, ys.second)},
                                                   cm);
                        }
                    }
                    TensorCombo got_braided = coproduct_q(PosetCombo(pq), braided);
                    if (got_braided != expect_braided)
                        return mismatch("braided form at " + p.to_string() + ", " +
                                            q.to_string(),
                                        got_braided, expect_braided);
                    // Infinitesimal form.
                    TensorCombo dpi = coproduct_q(PosetCombo(p), inf);
                    TensorCombo dqi = coproduct_q(PosetCombo(q), inf);
                    TensorCombo expect_inf;
                    for (const auto& [ys, cy] : dqi.terms())
                        expect_inf.add({PlanePoset::concat(p, ys.first), ys.second}, cy);
                    for (const auto& [xs, cx] : dpi.terms())
                        expect_inf.add({xs.first, PlanePoset::concat(xs.second, q)}, cx);
                    expect_inf.add({p, q}, -one);
                    TensorCombo got_inf = coproduct_q(PosetCombo(pq), inf);
                    if (got_inf != expect_inf)
                        return mismatch("infinitesimal form at " + p.to_string() + ", " +
                                            q.to_string(),
                                        got_inf, expect_inf);
                    // Vanishing concat weights make concat products primitive, and
                    // vanishing over weights make over products primitive.
                    TensorCombo prim_concat =
                        coproduct_q(PosetCombo(pq), DeformParams::of(q1(), q2(), zero, zero));
                    TensorCombo expect_prim;
                    expect_prim.add({pq, PlanePoset()}, one);
                    expect_prim.add({PlanePoset(), pq}, one);
                    if (prim_concat != expect_prim)
                        return mismatch("primitive concat product at " + p.to_string() + ", " +
                                            q.to_string(),
                                        prim_concat, expect_prim);
                    PlanePoset over_pq = PlanePoset::over(p, q);
                    TensorCombo prim_over = coproduct_q(
                        PosetCombo(over_pq), DeformParams::of(zero, zero, q3(), q4()));
                    TensorCombo expect_prim_over;
                    expect_prim_over.add({over_pq, PlanePoset()}, one);
                    expect_prim_over.add({PlanePoset(), over_pq}, one);
                    if (prim_over != expect_prim_over)
                        return mismatch("primitive over product at " + p.to_string() + ", " +
                                            q.to_string(),
                                        prim_over, expect_prim_over);
                }
            }
        }
    }
    return "";
}

// --- Counit, unit, grading ---------------------------------------------------

std::string check_counit_and_grading(int max_degree) {
    int bound = std::min(max_degree, 6);
    PosetCombo unit{PlanePoset()};
    for (const auto& p : posets_up_to(bound)) {
        PosetCombo xp(p);
        if (product_q(unit, xp) != xp || product_q(xp, unit) != xp)
            return "unit law broken at " + p.to_string();
        TensorCombo d = coproduct_q(xp);
        PosetCombo left_strip, right_strip;
        for (const auto& [ab, c] : d.terms()) {
            if (ab.first.size() + ab.second.size() != p.size())
                return "coproduct not graded at " + p.to_string();
            if (ab.first.size() == 0) left_strip.add(ab.second, c);
            if (ab.second.size() == 0) right_strip.add(ab.first, c);
        }
        if (left_strip != xp || right_strip != xp)
            return "counit law broken at " + p.to_string();
    }
    int pair_bound = std::min(max_degree, 5);
    for (int na = 1; na < pair_bound; ++na)
        for (int nb = 1; na + nb <= pair_bound; ++nb)
            for (const auto& p : enumerate_posets(na))
                for (const auto& q : enumerate_posets(nb)) {
                    PosetCombo pq = product_q(PosetCombo(p), PosetCombo(q));
                    for (const auto& [r, c] : pq.terms())
                        if (r.size() != na + nb)
                            return "product not graded at " + p.to_string() + ", " +
                                   q.to_string();
                }
    // Counit is multiplicative on combinations touching the unit.
    PosetCombo mixed = unit + PosetCombo(psi({1}), q1() + q2());
    if (counit(product_q(mixed, mixed)) != counit(mixed) * counit(mixed))
        return "counit not multiplicative";
    return "";
}

// --- Pattern classes under the product ---------------------------------------

std::string check_pattern_class_ideals(int max_degree) {
    const QPoly zero = QPoly::zero();
    auto concat_slice = DeformParams::of(zero, zero, q3(), q4());
    auto over_slice = DeformParams::of(q1(), q2(), zero, zero);
    int closure_bound = std::min(max_degree, 4);
    for (int na = 1; na < closure_bound; ++na) {
        for (int nb = 1; na + nb <= closure_bound; ++nb) {
            for (const auto& p : enumerate_posets(na)) {
                for (const auto& q : enumerate_posets(nb)) {
                    Classification cp = p.classify(), cq = q.classify();
                    if (cp.is_wn && cq.is_wn) {
                        for (const auto& slice : {&concat_slice, &over_slice}) {
                            PosetCombo sliced = product_q(PosetCombo(p), PosetCombo(q), *slice);
                            for (const auto& [r, c] : sliced.terms())
                                if (!r.classify().is_wn)
                                    return "degenerate product left the crossing-free class "
                                           "at " +
                                           p.to_string() + ", " + q.to_string() + " -> " +
                                           r.to_string();
                        }
                    }
                    if (cp.is_forest && cq.is_forest) {
                        // Forests survive only the slice keeping the r weights;
                        // the h slice already escapes at p:21 times p:1.
                        PosetCombo cats = product_q(PosetCombo(p), PosetCombo(q), concat_slice);
                        for (const auto& [r, c] : cats.terms())
                            if (!r.classify().is_forest)
                                return "degenerate product left the forest class at " +
                                       p.to_string() + ", " + q.to_string() + " -> " +
                                       r.to_string();
                    }
                }
            }
        }
    }
    // Span of the complements is an ideal for the full product.
    int ideal_bound = std::min(max_degree, 5);
    for (int na = 1; na < ideal_bound; ++na) {
        for (int nb = 1; na + nb <= ideal_bound; ++nb) {
            for (const auto& p : enumerate_posets(na)) {
                for (const auto& q : enumerate_posets(nb)) {
                    Classification cp = p.classify(), cq = q.classify();
                    bool wn_out = !cp.is_wn || !cq.is_wn;
                    bool forest_out = !cp.is_forest || !cq.is_forest;
                    if (!wn_out && !forest_out) continue;
                    PosetCombo full = product_q(PosetCombo(p), PosetCombo(q));
                    for (const auto& [r, c] : full.terms()) {
                        Classification cr = r.classify();
                        if (wn_out && cr.is_wn)
                            return "crossing-free span is not an ideal at " + p.to_string() +
                                   ", " + q.to_string() + " -> " + r.to_string();
                        if (forest_out && cr.is_forest)
                            return "forest span is not an ideal at " + p.to_string() + ", " +
                                   q.to_string() + " -> " + r.to_string();
                    }
                }
            }
        }
    }
    // Pinned escape coefficients out of both classes for the generic product.
    struct Pin {
        std::vector<int> left, right, whole;
        QPoly expect;
    };
    const std::vector<Pin> pins = {
        {{2, 1, 3}, {1}, {3, 1, 4, 2}, q1() * q3() * q3()},
        {{2, 1, 3}, {1}, {2, 4, 1, 3}, q1() * q4() * q4()},
        {{1}, {2, 1, 3}, {3, 1, 4, 2}, q2() * q4() * q4()},
        {{1}, {2, 1, 3}, {2, 4, 1, 3}, q2() * q3() * q3()},
        {{1}, {2, 1}, {2, 1, 3}, q2() * q2()},
        {{2, 1}, {1}, {2, 1, 3}, q1() * q1()},
    };
    for (const auto& pin : pins) {
        PosetCombo prod = product_q(PosetCombo(psi(pin.left)), PosetCombo(psi(pin.right)));
        QPoly got = prod.coefficient(psi(pin.whole));
        if (got != pin.expect)
            return detail::mismatch_poly("pinned escape coefficient of " +
                                             psi(pin.whole).to_string() + " in product of " +
                                             psi(pin.left).to_string() + " and " +
                                             psi(pin.right).to_string(),
                                         got, pin.expect);
    }
    return "";
}

// --- Rescaling morphisms ------------------------------------------------------

std::string check_rescaling_morphisms(int max_degree) {
    int bound = std::min(max_degree, 5);
    auto h_scaled = DeformParams::of(tv() * q1(), tv() * q2(), q3(), q4());
    auto r_scaled = DeformParams::of(q1(), q2(), tv() * q3(), tv() * q4());
    auto rescale_pair = [](const TensorCombo& x, bool h_side) {
        TensorCombo out;
        for (const auto& [ab, c] : x.terms()) {
            long e = h_side ? ab.first.h_total() + ab.second.h_total()
                            : ab.first.r_total() + ab.second.r_total();
            out.add(ab, c * tv().pow(static_cast<std::uint32_t>(e)));
        }
        return out;
    };
    for (const auto& p : posets_up_to(bound)) {
        PosetCombo xp(p);
        TensorCombo lhs = coproduct_q(h_weight_rescale(xp));
        TensorCombo rhs = rescale_pair(coproduct_q(xp, h_scaled), true);
        if (lhs != rhs)
            return mismatch("h rescaling coalgebra morphism at " + p.to_string(), lhs, rhs);
        TensorCombo lhs_r = coproduct_q(r_weight_rescale(xp));
        TensorCombo rhs_r = rescale_pair(coproduct_q(xp, r_scaled), false);
        if (lhs_r != rhs_r)
            return mismatch("r rescaling coalgebra morphism at " + p.to_string(), lhs_r, rhs_r);
    }
    int pair_bound = std::min(max_degree, 5);
    for (int na = 1; na < pair_bound; ++na) {
        for (int nb = 1; na + nb <= pair_bound; ++nb) {
            for (const auto& p : enumerate_posets(na)) {
                for (const auto& q : enumerate_posets(nb)) {
                    PosetCombo xp(p), xq(q);
                    // h rescaling is concat multiplicative; on the over product it
                    // twists by the cross-pair count.
                    PosetCombo cat = h_weight_rescale(concat_product(xp, xq));
                    if (cat != concat_product(h_weight_rescale(xp), h_weight_rescale(xq)))
                        return "h rescaling not concat multiplicative at " + p.to_string() +
                               ", " + q.to_string();
                    PosetCombo over_lhs = h_weight_rescale(over_product(xp, xq));
                    PosetCombo over_rhs =
                        over_product(h_weight_rescale(xp), h_weight_rescale(xq)) *
                        tv().pow(static_cast<std::uint32_t>(na * nb));
                    if (over_lhs != over_rhs)
                        return mismatch("h rescaling twist on the over product at " +
                                            p.to_string() + ", " + q.to_string(),
                                        over_lhs, over_rhs);
                    // r rescaling mirrors this.
                    PosetCombo over_mult = r_weight_rescale(over_product(xp, xq));
                    if (over_mult != over_product(r_weight_rescale(xp), r_weight_rescale(xq)))
                        return "r rescaling not over multiplicative at " + p.to_string() +
                               ", " + q.to_string();
                    PosetCombo cat_lhs = r_weight_rescale(concat_product(xp, xq));
                    PosetCombo cat_rhs =
                        concat_product(r_weight_rescale(xp), r_weight_rescale(xq)) *
                        tv().pow(static_cast<std::uint32_t>(na * nb));
                    if (cat_lhs != cat_rhs)
                        return mismatch("r rescaling twist on concat at " + p.to_string() +
                                            ", " + q.to_string(),
                                        cat_lhs, cat_rhs);
                }
            }
        }
    }
    return "";
}

} // namespace

std::vector<Check> algebra_checks() {
    return {
        {"algebra_product_tables", check_product_tables},
        {"algebra_coproduct_tables", check_coproduct_tables},
        {"product_associativity", check_product_associativity},
        {"coproduct_coassociativity", check_coproduct_coassociativity},
        {"product_coproduct_duality", check_product_coproduct_duality},
        {"product_specializations", check_product_specializations},
        {"coproduct_classical_point", check_coproduct_classical_point},
        {"coproduct_special_slices", check_coproduct_special_slices},
        {"coproduct_deconcatenation_slices", check_coproduct_deconcatenation_slices},
        {"coproduct_component_slices", check_coproduct_component_slices},
        {"product_shuffle_slice", check_product_shuffle_slice},
        {"product_symmetry_reparametrizations", check_product_symmetry_reparametrizations},
        {"coproduct_symmetry_reparametrizations", check_coproduct_symmetry_reparametrizations},
        {"coproduct_product_compatibility", check_coproduct_product_compatibility},
        {"coproduct_concat_hopf_forms", check_coproduct_concat_hopf_forms},
        {"counit_and_grading", check_counit_and_grading},
        {"pattern_class_ideals", check_pattern_class_ideals},
        {"rescaling_morphisms", check_rescaling_morphisms},
    };
}

} // namespace phl
