#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "phl/pairing.hpp"

using namespace phl;

namespace {

PlanePoset P(std::vector<int> w) { return PlanePoset(Permutation(std::move(w))); }
QPoly qv(Var v, std::uint32_t pow = 1) { return QPoly::variable(v, pow); }

} // namespace

TEST_CASE("crossing statistics") {
    CHECK(phi_stats(P({1, 2}), P({2, 1}), Permutation::identity(2)) ==
          PhiStats{1, 0, 0, 0});
    CHECK(phi_stats(P({2, 1}), P({1, 2}), Permutation::identity(2)) ==
          PhiStats{1, 0, 0, 0});
    CHECK(phi_stats(P({2, 1}), P({1, 2}), Permutation({2, 1})) == PhiStats{0, 1, 0, 0});
    CHECK(phi_stats(P({2, 1}), P({2, 1}), Permutation({2, 1})) == PhiStats{0, 0, 0, 1});
    for (const PlanePoset& p : enumerate_posets(3)) {
        PhiStats self = phi_stats(p, p, Permutation::identity(3));
        CHECK(self.phi1 == p.h_total());
        CHECK(self.phi2 == p.h_total());
        CHECK(self.phi3 == p.r_total());
        CHECK(self.phi4 == 0);
    }
    // Invariance under inverting the bijection between the two sides.
    Permutation sigma({2, 3, 1});
    CHECK(phi_stats(P({1, 3, 2}), P({2, 3, 1}), sigma) ==
          phi_stats(P({2, 3, 1}), P({1, 3, 2}), sigma.inverse()));
}

TEST_CASE("first pairing in degree two") {
    CHECK(pair_first(PlanePoset(), PlanePoset()).is_one());
    CHECK(pair_first(P({1}), P({1})).is_one());
    CHECK(pair_first(P({1, 2}), P({1})).is_zero());
    CHECK(pair_first(P({1, 2}), P({1, 2})) == QPoly(2L) * qv(Var::Q1) * qv(Var::Q2));
    CHECK(pair_first(P({1, 2}), P({2, 1})) == qv(Var::Q1) + qv(Var::Q2));
    CHECK(pair_first(P({2, 1}), P({2, 1})) == qv(Var::Q3) + qv(Var::Q4));
}

TEST_CASE("first pairing hand-expanded degree-three values") {
    QPoly q1 = qv(Var::Q1), q2 = qv(Var::Q2), q3 = qv(Var::Q3), q4 = qv(Var::Q4);
    CHECK(pair_first(P({1, 3, 2}), P({2, 3, 1})) ==
          QPoly(2L) * q1.pow(2) * q2 * q3 + QPoly(2L) * q1.pow(2) * q2 * q4 +
              q1 * q2.pow(2) + q2.pow(3));
    QPoly mixed = q1.pow(3) + q1.pow(2) * q2 + QPoly(2L) * q1 * q2.pow(2) * q3 +
                  QPoly(2L) * q1 * q2.pow(2) * q4;
    CHECK(pair_first(P({2, 1, 3}), P({2, 3, 1})) == mixed);
    CHECK(pair_first(P({1, 3, 2}), P({3, 1, 2})) == mixed);
    QPoly diag = q1.pow(3) * q2 + QPoly(2L) * q1.pow(2) * q2.pow(2) + q1 * q2.pow(3) +
                 q1.pow(2) * q2.pow(2) * q3 + q1.pow(2) * q2.pow(2) * q4;
    CHECK(pair_first(P({1, 3, 2}), P({1, 3, 2})) == diag);
    CHECK(pair_first(P({2, 1, 3}), P({1, 3, 2})) == diag);
    QPoly chain_row = QPoly(3L) * q1.pow(3) * q2.pow(2) + QPoly(3L) * q1.pow(2) * q2.pow(3);
    CHECK(pair_first(P({1, 2, 3}), P({1, 3, 2})) == chain_row);
    CHECK(pair_first(P({1, 2, 3}), P({2, 1, 3})) == chain_row);
    QPoly anti = (q1 + q2) * (q3.pow(2) + q3 * q4 + q4.pow(2));
    CHECK(pair_first(P({3, 2, 1}), P({2, 3, 1})) == anti);
    CHECK(pair_first(P({3, 2, 1}), P({3, 1, 2})) == anti);
    // Symmetry spot checks on asymmetric-looking inputs.
    CHECK(pair_first(P({2, 3, 1}), P({1, 3, 2})) ==
          pair_first(P({1, 3, 2}), P({2, 3, 1})));
}

TEST_CASE("rigid bijection sets") {
    CHECK(s_set(P({1, 2}), P({2, 1})) == std::vector<Permutation>{Permutation::identity(2)});
    CHECK(s_set(P({1, 2}), P({1, 2})).empty());
    CHECK(s_set(P({1, 3, 2}), P({3, 1, 2})) ==
          std::vector<Permutation>{Permutation::identity(3)});
    CHECK(s_set(P({1}), P({1, 2})).empty());
    // The second summation set contains the first.
    for (const PlanePoset& p : enumerate_posets(3)) {
        for (const PlanePoset& q : enumerate_posets(3)) {
            auto rigid = s_set(p, q);
            auto wide = s_prime_set(p, q);
            for (const auto& sigma : rigid)
                CHECK(std::find(wide.begin(), wide.end(), sigma) != wide.end());
        }
    }
}

TEST_CASE("minimal partner is the order exchange") {
    CHECK(min_partner(P({1, 2})) == P({2, 1}));
    CHECK(min_partner(P({2, 1})) == P({1, 2}));
    CHECK(min_partner(P({1, 3, 2})) == P({3, 1, 2}));
    CHECK(min_partner(P({2, 3, 1})) == P({2, 3, 1}).transform(Transform::Iota));
}

TEST_CASE("second pairing small values") {
    QPoly q1 = qv(Var::Q1), q4 = qv(Var::Q4);
    CHECK(pair_second(P({1}), P({1})).is_one());
    CHECK(pair_second(P({1, 2}), P({1, 2})) == q1);
    CHECK(pair_second(P({1, 2}), P({2, 1})) == q1);
    CHECK(pair_second(P({2, 1}), P({2, 1})) == q1 + q4);
    QPoly a = q1.pow(3);
    QPoly b = q1.pow(2) * (q1 + q4);
    QPoly c = q1 * (q1.pow(2) + q4.pow(2));
    QPoly d = q1 * (q1.pow(2) + q1 * q4 + q4.pow(2));
    QPoly e = (q1 + q4) * (q1.pow(2) + q1 * q4 + q4.pow(2));
    CHECK(pair_second(P({1, 2, 3}), P({3, 2, 1})) == a);
    CHECK(pair_second(P({1, 3, 2}), P({2, 3, 1})) == b);
    CHECK(pair_second(P({2, 1, 3}), P({2, 1, 3})) == b);
    CHECK(pair_second(P({2, 3, 1}), P({3, 1, 2})) == c);
    CHECK(pair_second(P({2, 3, 1}), P({3, 2, 1})) == d);
    CHECK(pair_second(P({3, 2, 1}), P({3, 2, 1})) == e);
    CHECK(pair_second(P({3, 1, 2}), P({2, 3, 1})) == c);
}

TEST_CASE("second summation set is cut out by linear extensions") {
    CHECK(s_prime_set(P({1, 2}), P({1, 2})) ==
          std::vector<Permutation>{Permutation::identity(2)});
    CHECK(s_prime_set(P({2, 1}), P({2, 1})) == Permutation::all(2));
    // Membership needs the inverse to extend the left poset and the word to
    // extend the right one.
    for (const PlanePoset& p : enumerate_posets(3)) {
        auto left_ext = p.linear_extensions();
        for (const PlanePoset& q : enumerate_posets(3)) {
            auto right_ext = q.linear_extensions();
            for (const auto& sigma : Permutation::all(3)) {
                bool lhs_in = std::find(left_ext.begin(), left_ext.end(),
                                        sigma.inverse()) != left_ext.end() &&
                              std::find(right_ext.begin(), right_ext.end(), sigma) !=
                                  right_ext.end();
                auto sp = s_prime_set(p, q);
                bool rhs_in = std::find(sp.begin(), sp.end(), sigma) != sp.end();
                CHECK(lhs_in == rhs_in);
            }
        }
    }
}

TEST_CASE("bilinear and tensor extensions") {
    PosetCombo x = PosetCombo(P({1, 2})) * qv(Var::T);
    PosetCombo y = PosetCombo(P({2, 1}));
    CHECK(pair(x, y, Pairing::FIRST) == qv(Var::T) * (qv(Var::Q1) + qv(Var::Q2)));
    TensorCombo tx = tensor(PosetCombo(P({1})), PosetCombo(P({1, 2})));
    TensorCombo ty = tensor(PosetCombo(P({1})), PosetCombo(P({2, 1})));
    CHECK(pair(tx, ty, Pairing::FIRST) == qv(Var::Q1) + qv(Var::Q2));
    CHECK(pair(tx, ty, Pairing::SECOND) == qv(Var::Q1));
    // Mismatched component degrees pair to zero.
    TensorCombo tz = tensor(PosetCombo(P({1, 2})), PosetCombo(P({1})));
    CHECK(pair(tx, tz, Pairing::FIRST).is_zero());
}

TEST_CASE("gram matrices") {
    auto g1 = gram(1, Pairing::FIRST);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0][0].is_one());
    auto g2 = gram(2, Pairing::FIRST);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0][0] == QPoly(2L) * qv(Var::Q1) * qv(Var::Q2));
    CHECK(g2[0][1] == qv(Var::Q1) + qv(Var::Q2));
    CHECK(g2[1][0] == g2[0][1]);
    CHECK(g2[1][1] == qv(Var::Q3) + qv(Var::Q4));
    auto s2 = gram(2, Pairing::SECOND);
    CHECK(s2[0][0] == qv(Var::Q1));
    CHECK(s2[1][1] == qv(Var::Q1) + qv(Var::Q4));
}

TEST_CASE("gram determinants") {
    CHECK(gram_det(2, Pairing::SECOND) == qv(Var::Q1) * qv(Var::Q4));
    QPoly q1 = qv(Var::Q1), q2 = qv(Var::Q2), q3 = qv(Var::Q3), q4 = qv(Var::Q4);
    CHECK(gram_det(2, Pairing::FIRST) ==
          QPoly(2L) * q1 * q2 * (q3 + q4) - (q1 + q2) * (q1 + q2));
    std::array<std::optional<Int>, kNumVars> kill_q2{};
    kill_q2[1] = Int(0);
    CHECK(gram_det(2, Pairing::FIRST, kill_q2) == -q1.pow(2));
    CHECK_THROWS_AS(gram_det(5, Pairing::FIRST), std::invalid_argument);
    CHECK_NOTHROW(gram_det(2, Pairing::FIRST, {}, 2));
}

TEST_CASE("fraction-free determinant") {
    CHECK(matrix_det({}).is_one());
    CHECK(matrix_det({{qv(Var::Q1)}}) == qv(Var::Q1));
    QPoly q1 = qv(Var::Q1), q2 = qv(Var::Q2), q3 = qv(Var::Q3), q4 = qv(Var::Q4);
    CHECK(matrix_det({{q1, q2}, {q3, q4}}) == q1 * q4 - q2 * q3);
    // Pivot row swap flips the sign.
    CHECK(matrix_det({{QPoly::zero(), q1}, {q2, QPoly::zero()}}) == -q1 * q2);
    CHECK(matrix_det({{q1, q1}, {q1, q1}}).is_zero());
    CHECK(matrix_det({{QPoly::zero(), QPoly::zero()}, {QPoly::zero(), q1}}).is_zero());
    // 3x3 integer example: det = -306.
    auto ip = [](long v) { return QPoly(v); };
    CHECK(matrix_det({{ip(6), ip(1), ip(1)}, {ip(4), ip(-2), ip(5)}, {ip(2), ip(8), ip(7)}}) ==
          ip(-306));
    CHECK_THROWS_AS(matrix_det({{q1, q2}}), std::invalid_argument);
}
