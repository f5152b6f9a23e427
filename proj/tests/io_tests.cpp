#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "phl/io.hpp"

using namespace phl;

namespace {

PlanePoset P(std::vector<int> w) { return PlanePoset(Permutation(std::move(w))); }
QPoly qv(Var v, std::uint32_t pow = 1) { return QPoly::variable(v, pow); }

} // namespace

TEST_CASE("poset parsing") {
    CHECK(parse_poset("p:132") == P({1, 3, 2}));
    CHECK(parse_poset("p:") == PlanePoset());
    CHECK(parse_poset("p:2,1") == P({2, 1}));
    for (const PlanePoset& p : enumerate_posets(3))
        CHECK(parse_poset(p.to_string()) == p);
    CHECK_THROWS_AS(parse_poset("132"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poset("p:11"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poset("p:10"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poset("s:12"), std::invalid_argument);
}

TEST_CASE("permutation parsing") {
    CHECK(parse_perm("s:213") == Permutation({2, 1, 3}));
    CHECK(parse_perm("s:") == Permutation());
    CHECK_THROWS_AS(parse_perm("p:12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("s:121"), std::invalid_argument);
    std::vector<int> big{10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    Permutation big_perm(big);
    CHECK(parse_perm("s:" + big_perm.to_string()) == big_perm);
}

TEST_CASE("subset parsing") {
    CHECK(parse_subset("{1,3,4}") == 0b1101u);
    CHECK(parse_subset("{}") == 0u);
    CHECK(parse_subset("{2}") == 0b10u);
    CHECK(parse_subset("{12}") == (Subset{1} << 11));
    CHECK_THROWS_AS(parse_subset("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("{1,1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("{0}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("{33}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("{1,}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("{a}"), std::invalid_argument);
}

TEST_CASE("polynomial parsing") {
    CHECK(parse_poly("q1^2+q1*q2+q2^2") ==
          qv(Var::Q1, 2) + qv(Var::Q1) * qv(Var::Q2) + qv(Var::Q2, 2));
    CHECK(parse_poly(" q1 + 2 ") == qv(Var::Q1) + QPoly(2L));
    CHECK(parse_poly("-q1+2") == QPoly(2L) - qv(Var::Q1));
    CHECK(parse_poly("3*t^2") == QPoly(3L) * qv(Var::T, 2));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("q1-q1").is_zero());
    CHECK(parse_poly("2*q3*q3") == QPoly(2L) * qv(Var::Q3, 2));
    CHECK_THROWS_AS(parse_poly("q5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("q1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("q1^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("q1 q2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
    // Printer output parses back.
    QPoly sample = QPoly(2L) * qv(Var::Q1, 3) * qv(Var::Q4) - qv(Var::T) + QPoly(5L);
    CHECK(parse_poly(sample.to_string()) == sample);
    CHECK(parse_poly(QPoly::zero().to_string()).is_zero());
    CHECK(parse_poly((-qv(Var::Q2)).to_string()) == -qv(Var::Q2));
}

TEST_CASE("error positions are reported") {
    try {
        parse_poset("p:1x2");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("at position 3") != std::string::npos);
    }
    try {
        parse_poly("q1 + q9");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("at position 5") != std::string::npos);
    }
}

TEST_CASE("text rendering") {
    PosetCombo x;
    x.add(P({1, 2}), qv(Var::Q1) + qv(Var::Q2));
    x.add(P({2, 1}), QPoly::one());
    CHECK(combo_to_text(x) == "(q1 + q2) p:12\n(1) p:21\n");
    CHECK(combo_to_text(PosetCombo()) == "0\n");
    TensorCombo t;
    t.add({P({1}), P({1})}, qv(Var::Q4));
    CHECK(combo_to_text(t) == "(q4) p:1 (x) p:1\n");
    PermCombo s(Permutation({1, 3, 2}));
    CHECK(combo_to_text(s) == "(1) s:132\n");
    PermTensorCombo pt;
    pt.add({Permutation({1}), Permutation({2, 1})}, qv(Var::Q1, 2));
    CHECK(combo_to_text(pt) == "(q1^2) s:1 (x) s:21\n");
}

TEST_CASE("csv rendering quotes only when needed") {
    PosetCombo x;
    x.add(P({1, 2}), qv(Var::Q1) + qv(Var::Q2));
    x.add(P({2, 1}), QPoly::one());
    CHECK(combo_to_csv(x) == "basis,coeff\n12,q1 + q2\n21,1\n");
    TensorCombo t;
    t.add({P({1}), P({1})}, qv(Var::Q4));
    CHECK(combo_to_csv(t) == "left,right,coeff\n1,1,q4\n");
    std::vector<int> big{10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    PosetCombo y{PlanePoset(Permutation(big))};
    CHECK(combo_to_csv(y) == "basis,coeff\n\"10,1,2,3,4,5,6,7,8,9\",1\n");
}

TEST_CASE("json round trips") {
    PosetCombo x;
    x.add(P({2, 1, 3}), qv(Var::Q1) * qv(Var::Q3, 2));
    x.add(P({1, 2}), QPoly(2L) - qv(Var::T));
    std::string jx = combo_to_json(x);
    CHECK(jx.find("\"basis\": \"213\"") != std::string::npos);
    CHECK(jx.find("\"coeff\": \"q1*q3^2\"") != std::string::npos);
    CHECK(poset_combo_from_json(jx) == x);

    TensorCombo t;
    t.add({P({1}), P({2, 1})}, qv(Var::Q2));
    t.add({PlanePoset(), P({1, 3, 2})}, QPoly::one());
    CHECK(tensor_combo_from_json(combo_to_json(t)) == t);

    PermCombo s(Permutation({3, 1, 2}));
    CHECK(perm_combo_from_json(combo_to_json(s)) == s);

    PermTensorCombo pt;
    pt.add({Permutation({2, 1}), Permutation()}, qv(Var::Q4, 3));
    CHECK(perm_tensor_combo_from_json(combo_to_json(pt)) == pt);

    CHECK(poset_combo_from_json(combo_to_json(PosetCombo())).is_zero());
    CHECK_THROWS_AS(poset_combo_from_json("not json"), std::exception);
    CHECK_THROWS_AS(poset_combo_from_json("{\"nope\":1}"), std::invalid_argument);
    CHECK_THROWS_AS(tensor_combo_from_json(
                        "{\"terms\":[{\"basis\":\"12\",\"coeff\":\"1\"}]}"),
                    std::invalid_argument);
}

TEST_CASE("gram renderers") {
    std::vector<PlanePoset> basis{P({1, 2}), P({2, 1})};
    std::vector<std::vector<QPoly>> entries{
        {QPoly(2L) * qv(Var::Q1) * qv(Var::Q2), qv(Var::Q1) + qv(Var::Q2)},
        {qv(Var::Q1) + qv(Var::Q2), qv(Var::Q3) + qv(Var::Q4)}};
    CHECK(gram_to_csv(entries, basis) ==
          ",12,21\n12,2*q1*q2,q1 + q2\n21,q1 + q2,q3 + q4\n");
    std::string j = gram_to_json(2, "first", entries, basis);
    CHECK(j.find("\"degree\": 2") != std::string::npos);
    CHECK(j.find("\"pairing\": \"first\"") != std::string::npos);
    CHECK(j.find("\"q3 + q4\"") != std::string::npos);
}
