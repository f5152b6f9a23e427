#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "phl/fqsym.hpp"
#include "phl/pairing.hpp"

using namespace phl;

namespace {

Permutation S(std::vector<int> w) { return Permutation(std::move(w)); }
PermCombo F(std::vector<int> w) { return PermCombo(S(std::move(w))); }
PlanePoset P(std::vector<int> w) { return PlanePoset(Permutation(std::move(w))); }
QPoly qm(std::uint32_t e1, std::uint32_t e4) {
    return QPoly::variable(Var::Q1, e1) * QPoly::variable(Var::Q4, e4);
}

} // namespace

TEST_CASE("shifted shuffle basics") {
    PermCombo two = shuffle_product(F({1}), F({1}));
    PermCombo expect2 = F({1, 2}) + F({2, 1});
    CHECK(two == expect2);
    PermCombo three = shuffle_product(F({1, 2}), F({1}));
    CHECK(three == F({1, 2, 3}) + F({1, 3, 2}) + F({3, 1, 2}));
    // Empty permutation is the unit.
    PermCombo unit = PermCombo(Permutation());
    CHECK(shuffle_product(unit, F({2, 1})) == F({2, 1}));
    CHECK(shuffle_product(F({2, 1}), unit) == F({2, 1}));
}

TEST_CASE("ten-term shuffle keeps both letter orders") {
    PermCombo got = shuffle_product(F({1, 2, 3}), F({2, 1}));
    CHECK(got.term_count() == 10);
    CHECK(got.coefficient(S({1, 2, 3, 5, 4})).is_one());
    CHECK(got.coefficient(S({5, 4, 1, 2, 3})).is_one());
    CHECK(got.coefficient(S({1, 5, 2, 4, 3})).is_one());
    CHECK(got.coefficient(S({4, 5, 1, 2, 3})).is_zero());
    for (const auto& [sigma, coeff] : got.terms()) {
        CHECK(coeff.is_one());
        std::vector<int> small, big;
        for (int v : sigma.word()) (v <= 3 ? small : big).push_back(v);
        CHECK(small == std::vector<int>{1, 2, 3});
        CHECK(big == std::vector<int>{5, 4});
    }
}

TEST_CASE("product of three points fills the symmetric group") {
    PermCombo got = shuffle_product(shuffle_product(F({1}), F({1})), F({1}));
    CHECK(got == shuffle_product(F({1}), shuffle_product(F({1}), F({1}))));
    CHECK(got.term_count() == 6);
    for (const auto& sigma : Permutation::all(3)) CHECK(got.coefficient(sigma).is_one());
}

TEST_CASE("deformed coproduct pinned values") {
    PermTensorCombo got = fqsym_coproduct(F({2, 1}));
    PermTensorCombo expect;
    expect.add({Permutation(), S({2, 1})}, QPoly::one());
    expect.add({S({1}), S({1})}, qm(0, 1));
    expect.add({S({2, 1}), Permutation()}, QPoly::one());
    CHECK(got == expect);

    PermTensorCombo big = fqsym_coproduct(F({4, 3, 1, 2, 5}));
    PermTensorCombo expect5;
    expect5.add({Permutation(), S({4, 3, 1, 2, 5})}, QPoly::one());
    expect5.add({S({1}), S({3, 1, 2, 4})}, qm(1, 3));
    expect5.add({S({2, 1}), S({1, 2, 3})}, qm(2, 4));
    expect5.add({S({3, 2, 1}), S({1, 2})}, qm(4, 2));
    expect5.add({S({4, 3, 1, 2}), S({1})}, qm(4, 0));
    expect5.add({S({4, 3, 1, 2, 5}), Permutation()}, QPoly::one());
    CHECK(big == expect5);
}

TEST_CASE("coproduct weight exponents sum to the cut rectangle") {
    for (const auto& sigma : Permutation::all(4)) {
        PermTensorCombo cuts = fqsym_coproduct(PermCombo(sigma));
        CHECK(cuts.term_count() == 5);
        for (const auto& [pair_, coeff] : cuts.terms()) {
            REQUIRE(coeff.term_count() == 1);
            const auto& [mono, c] = *coeff.terms().begin();
            CHECK(c == Int(1));
            int k = pair_.first.size();
            CHECK(mono.e[0] + mono.e[3] ==
                  static_cast<std::uint32_t>(k * (4 - k)));
        }
    }
}

TEST_CASE("deformed pairing on words") {
    CHECK(fqsym_pair(F({1, 2}), F({1, 2})) == qm(1, 0));
    CHECK(fqsym_pair(F({2, 1}), F({2, 1})) == qm(0, 1));
    CHECK(fqsym_pair(F({2, 3, 1}), F({3, 1, 2})) == qm(1, 2));
    CHECK(fqsym_pair(F({2, 3, 1}), F({2, 3, 1})).is_zero());
    CHECK(fqsym_pair(F({1, 2}), F({2, 1})).is_zero());
    CHECK(fqsym_pair(F({1}), F({1})).is_one());
    // Symmetry: inv(sigma) = inv(sigma inverse).
    for (const auto& sigma : Permutation::all(3))
        for (const auto& tau : Permutation::all(3))
            CHECK(fqsym_pair(PermCombo(sigma), PermCombo(tau)) ==
                  fqsym_pair(PermCombo(tau), PermCombo(sigma)));
    PermTensorCombo tx;
    tx.add({S({1, 2}), S({2, 1})}, QPoly::one());
    PermTensorCombo ty;
    ty.add({S({1, 2}), S({2, 1})}, QPoly::one());
    CHECK(fqsym_pair(tx, ty) == qm(1, 1));
}

TEST_CASE("linear extension map pinned images") {
    CHECK(theta(PosetCombo(P({1, 2, 3}))) == F({1, 2, 3}));
    CHECK(theta(PosetCombo(P({2, 1}))) == F({1, 2}) + F({2, 1}));
    CHECK(theta(PosetCombo(P({1, 3, 2}))) == F({1, 2, 3}) + F({1, 3, 2}));
    CHECK(theta(PosetCombo(P({2, 1, 3}))) == F({1, 2, 3}) + F({2, 1, 3}));
    CHECK(theta(PosetCombo(P({2, 3, 1}))) ==
          F({1, 2, 3}) + F({1, 3, 2}) + F({3, 1, 2}));
    CHECK(theta(PosetCombo(P({3, 2, 1}))).term_count() == 6);
    CHECK(theta(PosetCombo(PlanePoset())) == PermCombo(Permutation()));
    // Linearity.
    PosetCombo x = PosetCombo(P({1, 2})) * QPoly::variable(Var::T);
    CHECK(theta(x) == F({1, 2}) * QPoly::variable(Var::T));
}

TEST_CASE("image pairing transports the second pairing") {
    for (const PlanePoset& p : enumerate_posets(3))
        for (const PlanePoset& q : enumerate_posets(3))
            CHECK(fqsym_pair(theta(PosetCombo(p)), theta(PosetCombo(q))) ==
                  pair_second(p, q));
}
