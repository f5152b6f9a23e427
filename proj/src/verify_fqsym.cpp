#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phl/fqsym.hpp"
#include "phl/pairing.hpp"
#include "phl/verify.hpp"
#include "verify_util.hpp"

namespace phl {

namespace {

using detail::inline_text;
using detail::mismatch;

std::size_t vx(Var v) { return static_cast<std::size_t>(v); }

QPoly q_mono(int e1, int e4) {
    Monomial m;
    m.e[vx(Var::Q1)] = static_cast<std::uint32_t>(e1);
    m.e[vx(Var::Q4)] = static_cast<std::uint32_t>(e4);
    return QPoly::monomial(m, Int(1));
}

PermCombo word(std::initializer_list<int> w) { return PermCombo(Permutation(std::vector<int>(w))); }

std::array<std::optional<Int>, kNumVars> classical_point() {
    std::array<std::optional<Int>, kNumVars> a{};
    a[vx(Var::Q1)] = Int(1);
    a[vx(Var::Q4)] = Int(1);
    return a;
}

// Image of a poset tensor combination under the extension-listing map on each
// factor.
PermTensorCombo theta_pair(const TensorCombo& x) {
    PermTensorCombo result;
    for (const auto& [pq, c] : x.terms())
        for (const auto& left : pq.first.linear_extensions())
            for (const auto& right : pq.second.linear_extensions()) result.add({left, right}, c);
    return result;
}

// Componentwise product on the tensor square, used for the classical
// bialgebra axiom.
PermTensorCombo tensor_shuffle(const PermTensorCombo& x, const PermTensorCombo& y) {
    PermTensorCombo result;
    for (const auto& [ab, ca] : x.terms()) {
        for (const auto& [cd, cb] : y.terms()) {
            PermCombo lefts = shuffle_product(PermCombo(ab.first), PermCombo(cd.first));
            PermCombo rights = shuffle_product(PermCombo(ab.second), PermCombo(cd.second));
            for (const auto& [l, cl] : lefts.terms())
                for (const auto& [r, cr] : rights.terms())
                    result.add({l, r}, ca * cb * cl * cr);
        }
    }
    return result;
}

Int binomial(int n, int k) {
    Int result = 1;
    for (int i = 0; i < k; ++i) result = result * Int(n - i) / Int(i + 1);
    return result;
}

std::string check_shuffle_products(int) {
    PermCombo expect = word({1, 2}) + word({2, 1});
    if (shuffle_product(word({1}), word({1})) != expect)
        return mismatch("two single letters", shuffle_product(word({1}), word({1})), expect);
    expect = word({1, 2, 3}) + word({1, 3, 2}) + word({3, 1, 2});
    if (shuffle_product(word({1, 2}), word({1})) != expect)
        return mismatch("pair against letter", shuffle_product(word({1, 2}), word({1})), expect);
    // Ten interleavings of a rising run with a shifted falling pair.
    PermCombo big = shuffle_product(word({1, 2, 3}), word({2, 1}));
    if (big.term_count() != 10) return "ten-term product has wrong size";
    for (const auto& [sigma, c] : big.terms()) {
        if (!c.is_one()) return "ten-term product has a wrong coefficient";
        // The letters 1..3 appear in rising order, 5 before 4.
        const auto& w = sigma.word();
        std::vector<int> low, high;
        for (int v : w) (v <= 3 ? low : high).push_back(v);
        if (low != std::vector<int>({1, 2, 3}) || high != std::vector<int>({5, 4}))
            return "ten-term product contains a wrong word " + sigma.to_string();
    }
    // Term counts are binomial, with unit coefficients.
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            for (const auto& s : Permutation::all(m)) {
                for (const auto& t : Permutation::all(n)) {
                    PermCombo prod = shuffle_product(PermCombo(s), PermCombo(t));
                    Int total = 0;
                    for (const auto& [w, c] : prod.terms()) {
                        if (c.total_degree() > 0) return "unexpected parameter in a product";
                        total += c.terms().begin()->second;
                    }
                    if (total != binomial(m + n, m))
                        return "term count off for s:" + s.to_string() + ", s:" + t.to_string();
                }
            }
        }
    }
    if (!(shuffle_product(word({}), word({2, 1})) == word({2, 1})))
        return "empty word is not a unit";
    return "";
}

std::string check_shuffle_associativity(int max_degree) {
    int bound = std::min(max_degree, 5);
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            for (int c = 1; c + a + b <= bound; ++c) {
                for (const auto& x : Permutation::all(a))
                    for (const auto& y : Permutation::all(b))
                        for (const auto& z : Permutation::all(c)) {
                            PermCombo left = shuffle_product(
                                shuffle_product(PermCombo(x), PermCombo(y)), PermCombo(z));
                            PermCombo right = shuffle_product(
                                PermCombo(x), shuffle_product(PermCombo(y), PermCombo(z)));
                            if (left != right)
                                return "associativity fails at s:" + x.to_string() + ", s:" +
                                       y.to_string() + ", s:" + z.to_string();
                        }
            }
        }
    }
    return "";
}

std::string check_coproduct_pinned_examples(int) {
    auto tt = [](std::initializer_list<int> l, std::initializer_list<int> r) {
        return std::make_pair(Permutation(std::vector<int>(l)), Permutation(std::vector<int>(r)));
    };
    PermTensorCombo expect;
    expect.add(tt({}, {2, 1}), QPoly::one());
    expect.add(tt({1}, {1}), QPoly::variable(Var::Q4));
    expect.add(tt({2, 1}, {}), QPoly::one());
    PermTensorCombo got = fqsym_coproduct(word({2, 1}));
    if (got != expect) return mismatch("falling pair coproduct", got, expect);

    expect = PermTensorCombo();
    expect.add(tt({}, {4, 3, 1, 2, 5}), QPoly::one());
    expect.add(tt({1}, {3, 1, 2, 4}), q_mono(1, 3));
    expect.add(tt({2, 1}, {1, 2, 3}), q_mono(2, 4));
    expect.add(tt({3, 2, 1}, {1, 2}), q_mono(4, 2));
    expect.add(tt({4, 3, 1, 2}, {1}), q_mono(4, 0));
    expect.add(tt({4, 3, 1, 2, 5}, {}), QPoly::one());
    got = fqsym_coproduct(word({4, 3, 1, 2, 5}));
    if (got != expect) return mismatch("five-letter coproduct", got, expect);
    return "";
}

std::string check_coproduct_counts_and_exponents(int max_degree) {
    int bound = std::min(max_degree, 6);
    for (int n = 1; n <= bound; ++n) {
        for (const auto& sigma : Permutation::all(n)) {
            PermTensorCombo cop = fqsym_coproduct(PermCombo(sigma));
            if (cop.term_count() != static_cast<std::size_t>(n + 1))
                return "cut count wrong at s:" + sigma.to_string();
            const auto& w = sigma.word();
            for (const auto& [lr, c] : cop.terms()) {
                int k = lr.first.size();
                if (c.term_count() != 1) return "non-monomial weight at s:" + sigma.to_string();
                const auto& [mono, coeff] = *c.terms().begin();
                if (coeff != 1) return "non-unit weight at s:" + sigma.to_string();
                // Independent recount: the inverted exponent counts the falling
                // pairs across the cut, and the two exponents fill k(n-k).
                int crossings = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = k; j < n; ++j)
                        if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)])
                            ++crossings;
                if (mono.e[vx(Var::Q4)] != static_cast<std::uint32_t>(crossings) ||
                    mono.e[vx(Var::Q1)] + mono.e[vx(Var::Q4)] !=
                        static_cast<std::uint32_t>(k * (n - k)))
                    return "cut weight wrong at s:" + sigma.to_string();
            }
            if (cop.specialize(classical_point()).term_count() !=
                static_cast<std::size_t>(n + 1))
                return "classical cut weights wrong at s:" + sigma.to_string();
        }
    }
    return "";
}

std::string check_coproduct_coassociativity(int max_degree) {
    int bound = std::min(max_degree, 5);
    using Triple = std::array<Permutation, 3>;
    for (int n = 0; n <= bound; ++n) {
        for (const auto& sigma : Permutation::all(n)) {
            std::map<Triple, QPoly> left, right;
            auto put = [](std::map<Triple, QPoly>& m, const Triple& key, const QPoly& c) {
                QPoly& slot = m[key];
                slot += c;
                if (slot.is_zero()) m.erase(key);
            };
            PermTensorCombo once = fqsym_coproduct(PermCombo(sigma));
            for (const auto& [lr, c] : once.terms()) {
                PermTensorCombo first_again = fqsym_coproduct(PermCombo(lr.first));
                for (const auto& [ab, c2] : first_again.terms())
                    put(left, {ab.first, ab.second, lr.second}, c * c2);
                PermTensorCombo second_again = fqsym_coproduct(PermCombo(lr.second));
                for (const auto& [ab, c2] : second_again.terms())
                    put(right, {lr.first, ab.first, ab.second}, c * c2);
            }
            if (left != right) return "coassociativity fails at s:" + sigma.to_string();
        }
    }
    return "";
}

std::string check_classical_bialgebra_compatibility(int max_degree) {
    int bound = std::min(max_degree, 5);
    auto point = classical_point();
    for (int total = 2; total <= bound; ++total) {
        for (int a = 1; a < total; ++a) {
            for (const auto& x : Permutation::all(a)) {
                for (const auto& y : Permutation::all(total - a)) {
                    PermTensorCombo lhs =
                        fqsym_coproduct(shuffle_product(PermCombo(x), PermCombo(y)))
                            .specialize(point);
                    PermTensorCombo rhs =
                        tensor_shuffle(fqsym_coproduct(PermCombo(x)).specialize(point),
                                       fqsym_coproduct(PermCombo(y)).specialize(point));
                    if (lhs != rhs)
                        return "classical compatibility fails at s:" + x.to_string() + ", s:" +
                               y.to_string();
                }
            }
        }
    }
    return "";
}

std::string check_pairing_structure(int max_degree) {
    int bound = std::min(max_degree, 4);
    for (int n = 1; n <= bound; ++n) {
        for (const auto& sigma : Permutation::all(n)) {
            for (const auto& tau : Permutation::all(n)) {
                QPoly v = fqsym_pair(PermCombo(sigma), PermCombo(tau));
                if (tau == sigma.inverse()) {
                    int inv = sigma.inversions();
                    if (v != q_mono(n * (n - 1) / 2 - inv, inv))
                        return "diagonal value wrong at s:" + sigma.to_string();
                } else if (!v.is_zero()) {
                    return "off-inverse value not zero at s:" + sigma.to_string() + ", s:" +
                           tau.to_string();
                }
                if (v != fqsym_pair(PermCombo(tau), PermCombo(sigma)))
                    return "pairing not symmetric at s:" + sigma.to_string();
            }
        }
    }
    // Degree-wise determinant: a signed pure power in both parameters.
    for (int n = 2; n <= std::min(bound, 3); ++n) {
        auto perms = Permutation::all(n);
        std::size_t size = perms.size();
        std::vector<std::vector<QPoly>> m(size, std::vector<QPoly>(size));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                m[i][j] = fqsym_pair(PermCombo(perms[i]), PermCombo(perms[j]));
        int half = n * (n - 1) / 2 * static_cast<int>(factorial(n)) / 2;
        int transpositions = 0;
        for (std::size_t i = 0; i < size; ++i)
            if (perms[i].inverse().word() > perms[i].word()) ++transpositions;
        QPoly expect = q_mono(half, half) * QPoly(Int(transpositions % 2 ? -1 : 1));
        QPoly det = matrix_det(m);
        if (det != expect)
            return detail::mismatch_poly("determinant in degree " + std::to_string(n), det,
                                         expect);
    }
    return "";
}

std::string check_pairing_adjunction(int max_degree) {
    int bound = std::min(max_degree, 5);
    for (int total = 2; total <= bound; ++total) {
        for (int a = 1; a < total; ++a) {
            for (const auto& x : Permutation::all(a)) {
                for (const auto& y : Permutation::all(total - a)) {
                    PermCombo prod = shuffle_product(PermCombo(x), PermCombo(y));
                    PermTensorCombo xy;
                    xy.add({x, y}, QPoly::one());
                    for (const auto& z : Permutation::all(total)) {
                        QPoly lhs = fqsym_pair(prod, PermCombo(z));
                        QPoly rhs = fqsym_pair(xy, fqsym_coproduct(PermCombo(z)));
                        if (lhs != rhs)
                            return detail::mismatch_poly("adjunction at s:" + x.to_string() +
                                                             ", s:" + y.to_string() + ", s:" +
                                                             z.to_string(),
                                                         lhs, rhs);
                    }
                }
            }
        }
    }
    return "";
}

std::string check_theta_pinned_images(int) {
    auto chain = PlanePoset(Permutation({1, 2, 3}));
    if (theta(PosetCombo(chain)) != word({1, 2, 3})) return "chain image wrong";
    PermCombo expect = word({1, 2}) + word({2, 1});
    if (theta(PosetCombo(PlanePoset(Permutation({2, 1})))) != expect)
        return "two-letter antichain image wrong";
    expect = word({1, 2, 3}) + word({1, 3, 2});
    if (theta(PosetCombo(PlanePoset(Permutation({1, 3, 2})))) != expect)
        return "split-top image wrong";
    expect = word({1, 2, 3}) + word({2, 1, 3});
    if (theta(PosetCombo(PlanePoset(Permutation({2, 1, 3})))) != expect)
        return "split-bottom image wrong";
    return "";
}

std::string check_theta_algebra_morphism(int max_degree) {
    int bound = std::min(max_degree, 6);
    for (int total = 2; total <= bound; ++total) {
        for (int a = 1; a < total; ++a) {
            for (const auto& p : enumerate_posets(a)) {
                PermCombo tp = theta(PosetCombo(p));
                for (const auto& q : enumerate_posets(total - a)) {
                    PermCombo lhs = theta(PosetCombo(PlanePoset::concat(p, q)));
                    PermCombo rhs = shuffle_product(tp, theta(PosetCombo(q)));
                    if (lhs != rhs)
                        return mismatch("disjoint union image at " + p.to_string() + ", " +
                                            q.to_string(),
                                        lhs, rhs);
                }
            }
        }
    }
    return "";
}

std::string check_theta_coalgebra_morphism(int max_degree) {
    int bound = std::min(max_degree, 6);
    auto params = DeformParams::of(QPoly::variable(Var::Q1), QPoly::zero(),
                                   QPoly::variable(Var::Q1), QPoly::variable(Var::Q4));
    for (int n = 0; n <= bound; ++n) {
        for (const auto& p : enumerate_posets(n)) {
            PermTensorCombo lhs = theta_pair(coproduct_q(PosetCombo(p), params));
            PermTensorCombo rhs = fqsym_coproduct(theta(PosetCombo(p)));
            if (lhs != rhs) return mismatch("coproduct image at " + p.to_string(), lhs, rhs);
        }
    }
    return "";
}

std::string check_theta_isometry(int max_degree) {
    int bound = std::min(max_degree, 5);
    for (int n = 1; n <= bound; ++n) {
        for (const auto& p : enumerate_posets(n)) {
            PermCombo tp = theta(PosetCombo(p));
            for (const auto& q : enumerate_posets(n)) {
                QPoly lhs = fqsym_pair(tp, theta(PosetCombo(q)));
                if (lhs != pair_second(p, q))
                    return detail::mismatch_poly("isometry at " + p.to_string() + ", " +
                                                     q.to_string(),
                                                 lhs, pair_second(p, q));
            }
        }
    }
    return "";
}

std::string check_theta_rank(int max_degree) {
    int bound = std::min(max_degree, 4);
    for (int n = 1; n <= bound; ++n) {
        const auto& posets = enumerate_posets(n);
        auto perms = Permutation::all(n);
        std::size_t size = posets.size();
        std::vector<std::vector<QPoly>> m(size, std::vector<QPoly>(size));
        for (std::size_t i = 0; i < size; ++i) {
            PermCombo image = theta(PosetCombo(posets[i]));
            for (std::size_t j = 0; j < size; ++j) {
                auto it = image.terms().find(perms[j]);
                m[i][j] = it == image.terms().end() ? QPoly::zero() : it->second;
            }
        }
        if (matrix_det(m).is_zero())
            return "extension-listing map is singular in degree " + std::to_string(n);
    }
    return "";
}

} // namespace

std::vector<Check> fqsym_checks() {
    return {
        {"fqsym_shuffle_products", check_shuffle_products},
        {"fqsym_shuffle_associativity", check_shuffle_associativity},
        {"fqsym_coproduct_pinned_examples", check_coproduct_pinned_examples},
        {"fqsym_coproduct_counts_and_exponents", check_coproduct_counts_and_exponents},
        {"fqsym_coproduct_coassociativity", check_coproduct_coassociativity},
        {"fqsym_classical_bialgebra_compatibility", check_classical_bialgebra_compatibility},
        {"fqsym_pairing_structure", check_pairing_structure},
        {"fqsym_pairing_adjunction", check_pairing_adjunction},
        {"fqsym_theta_pinned_images", check_theta_pinned_images},
        {"fqsym_theta_algebra_morphism", check_theta_algebra_morphism},
        {"fqsym_theta_coalgebra_morphism", check_theta_coalgebra_morphism},
        {"fqsym_theta_isometry", check_theta_isometry},
        {"fqsym_theta_rank", check_theta_rank},
    };
}

} // namespace phl
