#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "phl/algebra.hpp"

using namespace phl;

namespace {

PlanePoset P(std::vector<int> w) { return PlanePoset(Permutation(std::move(w))); }
PosetCombo C(const PlanePoset& p) { return PosetCombo(p); }
QPoly qv(Var v, std::uint32_t pow = 1) { return QPoly::variable(v, pow); }

} // namespace

TEST_CASE("product of two points") {
    PosetCombo got = product_q(C(P({1})), C(P({1})));
    PosetCombo expect;
    expect.add(P({1, 2}), qv(Var::Q1) + qv(Var::Q2));
    expect.add(P({2, 1}), qv(Var::Q3) + qv(Var::Q4));
    CHECK(got == expect);
}

TEST_CASE("product of the h chain with a point") {
    PosetCombo got = product_q(C(P({1, 2})), C(P({1})));
    PosetCombo expect;
    expect.add(P({1, 2, 3}), qv(Var::Q1, 2) + qv(Var::Q1) * qv(Var::Q2) + qv(Var::Q2, 2));
    expect.add(P({1, 3, 2}), qv(Var::Q1) * qv(Var::Q3) + qv(Var::Q1) * qv(Var::Q4));
    expect.add(P({2, 1, 3}), qv(Var::Q2) * qv(Var::Q3) + qv(Var::Q2) * qv(Var::Q4));
    expect.add(P({2, 3, 1}), qv(Var::Q3, 2));
    expect.add(P({3, 1, 2}), qv(Var::Q4, 2));
    CHECK(got == expect);
}

TEST_CASE("empty poset is the product unit") {
    PosetCombo unit = C(PlanePoset());
    for (const PlanePoset& p : enumerate_posets(3)) {
        CHECK(product_q(unit, C(p)) == C(p));
        CHECK(product_q(C(p), unit) == C(p));
    }
}

TEST_CASE("product is bilinear") {
    PosetCombo x = C(P({1})) * qv(Var::T) + C(P({1, 2}));
    PosetCombo y = C(P({1}));
    PosetCombo lhs = product_q(x, y);
    PosetCombo rhs =
        product_q(C(P({1})), y) * qv(Var::T) + product_q(C(P({1, 2})), y);
    CHECK(lhs == rhs);
}

TEST_CASE("gluing terms carry the four cross statistics") {
    const auto& terms = product_gluings(P({1}), P({1}));
    REQUIRE(terms.size() == 4);
    for (const auto& t : terms) {
        CHECK(t.whole.size() == 2);
        CHECK(subset_size(t.inner) == 1);
        int total = t.exps[0] + t.exps[1] + t.exps[2] + t.exps[3];
        CHECK(total == 1);
    }
}

TEST_CASE("custom parameter slots") {
    DeformParams params = DeformParams::of(qv(Var::T), QPoly::zero(), QPoly::zero(),
                                           QPoly::zero());
    PosetCombo got = product_q(C(P({1})), C(P({1})), params);
    PosetCombo expect;
    expect.add(P({1, 2}), qv(Var::T));
    CHECK(got == expect);
    CHECK(params.weight({2, 0, 0, 0}) == qv(Var::T, 2));
    CHECK(params.weight({0, 1, 0, 0}).is_zero());
    CHECK(DeformParams::generic().weight({1, 0, 2, 0}) == qv(Var::Q1) * qv(Var::Q3, 2));
}

TEST_CASE("coproduct of the two chains") {
    TensorCombo got_h = coproduct_q(C(P({1, 2})));
    TensorCombo expect_h;
    expect_h.add({P({1, 2}), PlanePoset()}, QPoly::one());
    expect_h.add({P({1}), P({1})}, qv(Var::Q1) + qv(Var::Q2));
    expect_h.add({PlanePoset(), P({1, 2})}, QPoly::one());
    CHECK(got_h == expect_h);

    TensorCombo got_r = coproduct_q(C(P({2, 1})));
    TensorCombo expect_r;
    expect_r.add({P({2, 1}), PlanePoset()}, QPoly::one());
    expect_r.add({P({1}), P({1})}, qv(Var::Q3) + qv(Var::Q4));
    expect_r.add({PlanePoset(), P({2, 1})}, QPoly::one());
    CHECK(got_r == expect_r);
}

TEST_CASE("coproduct of word 132") {
    TensorCombo got = coproduct_q(C(P({1, 3, 2})));
    TensorCombo expect;
    expect.add({P({1, 3, 2}), PlanePoset()}, QPoly::one());
    expect.add({PlanePoset(), P({1, 3, 2})}, QPoly::one());
    expect.add({P({2, 1}), P({1})}, qv(Var::Q2, 2));
    expect.add({P({1, 2}), P({1})},
               qv(Var::Q1) * qv(Var::Q3) + qv(Var::Q1) * qv(Var::Q4));
    expect.add({P({1}), P({1, 2})},
               qv(Var::Q2) * qv(Var::Q3) + qv(Var::Q2) * qv(Var::Q4));
    expect.add({P({1}), P({2, 1})}, qv(Var::Q1, 2));
    CHECK(got == expect);
}

TEST_CASE("counit extracts the empty coefficient") {
    CHECK(counit(C(PlanePoset())).is_one());
    CHECK(counit(C(P({1, 2}))).is_zero());
    PosetCombo mix = C(PlanePoset()) * qv(Var::T) + C(P({1}));
    CHECK(counit(mix) == qv(Var::T));
}

TEST_CASE("undeformed composition products") {
    CHECK(concat_product(C(P({1, 2})), C(P({1}))) == C(P({2, 3, 1})));
    CHECK(over_product(C(P({1, 2})), C(P({1}))) == C(P({1, 2, 3})));
    PosetCombo x = C(P({1})) + C(P({1, 2}));
    CHECK(concat_product(x, C(P({1}))) ==
          C(PlanePoset::concat(P({1}), P({1}))) +
              C(PlanePoset::concat(P({1, 2}), P({1}))));
}

TEST_CASE("braiding and factor swap") {
    TensorCombo x = tensor(C(P({1, 2})), C(P({1})));
    TensorCombo swapped;
    swapped.add({P({1}), P({1, 2})}, qv(Var::Q4, 2));
    CHECK(braid(x) == swapped);
    TensorCombo swapped3;
    swapped3.add({P({1}), P({1, 2})}, qv(Var::Q3, 2));
    CHECK(braid(x, qv(Var::Q3)) == swapped3);
    TensorCombo plain;
    plain.add({P({1}), P({1, 2})}, QPoly::one());
    CHECK(swap_factors(x) == plain);
    CHECK(swap_factors(swap_factors(x)) == x);
}

TEST_CASE("transforms extend linearly") {
    PosetCombo x = C(P({1, 3, 2})) * qv(Var::Q3) + C(P({2, 3, 1}));
    PosetCombo expect = C(P({2, 1, 3})) * qv(Var::Q3) + C(P({2, 3, 1}));
    CHECK(apply_transform(x, Transform::Alpha) == expect);
    TensorCombo t = tensor(C(P({1, 2})), C(P({2, 1})));
    TensorCombo expect_t = tensor(C(P({2, 1})), C(P({1, 2})));
    CHECK(apply_transform(t, Transform::Iota) == expect_t);
}

TEST_CASE("weight rescalings") {
    PosetCombo x = C(P({1, 3, 2}));
    CHECK(h_weight_rescale(x) == x * qv(Var::T, 2));
    CHECK(r_weight_rescale(x) == x * qv(Var::T));
    CHECK(h_weight_rescale(x, qv(Var::Q1)) == x * qv(Var::Q1, 2));
    CHECK(h_weight_rescale(C(PlanePoset())) == C(PlanePoset()));
}
