#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <stdexcept>

#include "phl/qpoly.hpp"

using namespace phl;

namespace {

QPoly v(Var x, std::uint32_t pow = 1) { return QPoly::variable(x, pow); }

} // namespace

TEST_CASE("constants and predicates") {
    CHECK(QPoly::zero().is_zero());
    CHECK(QPoly::one().is_one());
    CHECK_FALSE(QPoly::one().is_zero());
    CHECK(QPoly(0L).is_zero());
    CHECK(QPoly(Int(-3)).term_count() == 1);
    CHECK(QPoly::zero().total_degree() == -1);
    CHECK(QPoly(7L).total_degree() == 0);
    CHECK(v(Var::Q1).total_degree() == 1);
    CHECK((v(Var::Q1) * v(Var::Q2) * v(Var::Q1)).total_degree() == 3);
}

TEST_CASE("ring arithmetic") {
    QPoly a = v(Var::Q1) + v(Var::Q2);
    QPoly sq = a * a;
    QPoly expect = v(Var::Q1, 2) + QPoly(2L) * v(Var::Q1) * v(Var::Q2) + v(Var::Q2, 2);
    CHECK(sq == expect);
    CHECK(a.pow(2) == sq);
    CHECK(a.pow(0).is_one());
    CHECK(a.pow(3) == sq * a);
    CHECK((sq - sq).is_zero());
    CHECK((-a + a).is_zero());
    CHECK((a * QPoly::zero()).is_zero());
    QPoly b = a;
    b += v(Var::Q1);
    b -= v(Var::Q2);
    CHECK(b == QPoly(2L) * v(Var::Q1));
    b *= v(Var::T);
    CHECK(b == QPoly(2L) * v(Var::Q1) * v(Var::T));
    CHECK(Int(5) * v(Var::Q3) == QPoly(5L) * v(Var::Q3));
}

TEST_CASE("add_term prunes cancellations") {
    QPoly p;
    Monomial m;
    m.e[0] = 2;
    p.add_term(m, Int(4));
    CHECK(p == QPoly(4L) * v(Var::Q1, 2));
    p.add_term(m, Int(-4));
    CHECK(p.is_zero());
}

TEST_CASE("printing uses descending graded lexicographic order") {
    QPoly p = v(Var::Q1, 2) + v(Var::Q1) * v(Var::Q2) + v(Var::Q2, 2);
    CHECK(p.to_string() == "q1^2 + q1*q2 + q2^2");
    CHECK((QPoly(2L) - v(Var::Q1)).to_string() == "-q1 + 2");
    CHECK(QPoly::zero().to_string() == "0");
    CHECK(v(Var::Q3).to_string() == "q3");
    CHECK(v(Var::T, 3).to_string() == "t^3");
    CHECK((v(Var::Q1) + v(Var::Q1)).to_string() == "2*q1");
    // Same total degree: lexicographic tie-break puts q1*q4 before q2*q3.
    CHECK((v(Var::Q2) * v(Var::Q3) + v(Var::Q1) * v(Var::Q4)).to_string() ==
          "q1*q4 + q2*q3");
    // Lower total degree sorts later regardless of leading variable.
    CHECK((v(Var::Q4, 2) + v(Var::Q1)).to_string() == "q4^2 + q1");
}

TEST_CASE("exact rational evaluation") {
    QPoly p = v(Var::Q1) * v(Var::Q3) + v(Var::Q2, 2);
    std::array<Rational, kNumVars> point{Rational(1, 2), Rational(1, 3), Rational(1, 2),
                                         Rational(0), Rational(0)};
    CHECK(p.eval(point) == Rational(13, 36));
    std::array<Rational, kNumVars> ones{Rational(1), Rational(1), Rational(1), Rational(1),
                                        Rational(1)};
    CHECK((v(Var::Q1) + v(Var::Q4)).eval(ones) == Rational(2));
}

TEST_CASE("partial integer specialization") {
    QPoly p = v(Var::Q1) * v(Var::Q2) + v(Var::Q3);
    std::array<std::optional<Int>, kNumVars> kill_q2{};
    kill_q2[1] = Int(0);
    CHECK(p.specialize(kill_q2) == v(Var::Q3));
    std::array<std::optional<Int>, kNumVars> set_q1{};
    set_q1[0] = Int(2);
    CHECK(v(Var::Q1, 2).specialize(set_q1) == QPoly(4L));
    CHECK(p.specialize({}) == p);
}

TEST_CASE("monomial substitution is a ring morphism") {
    QPoly p = v(Var::Q1, 2) * v(Var::Q3);
    CHECK(p.substitute_vars(identity_var_images()) == p);
    CHECK(p.substitute_vars(swap_var_images(Var::Q1, Var::Q2)) == v(Var::Q2, 2) * v(Var::Q3));
    auto scale = identity_var_images();
    scale[0] = scale[0] * Monomial{{0, 0, 0, 0, 1}};
    CHECK(v(Var::Q1, 2).substitute_vars(scale) == v(Var::Q1, 2) * v(Var::T, 2));
    QPoly a = v(Var::Q1) + v(Var::Q3);
    QPoly b = v(Var::Q1) - v(Var::Q4);
    auto sw = swap_var_images(Var::Q3, Var::Q4);
    CHECK((a * b).substitute_vars(sw) == a.substitute_vars(sw) * b.substitute_vars(sw));
}

TEST_CASE("exact division") {
    QPoly num = v(Var::Q1, 2) - v(Var::Q2, 2);
    QPoly den = v(Var::Q1) + v(Var::Q2);
    CHECK(num.divide_exact(den) == v(Var::Q1) - v(Var::Q2));
    CHECK(QPoly::zero().divide_exact(den).is_zero());
    CHECK((QPoly(6L) * v(Var::Q1)).divide_exact(QPoly(3L)) == QPoly(2L) * v(Var::Q1));
    CHECK_THROWS_AS(v(Var::Q1).divide_exact(v(Var::Q2)), std::domain_error);
    CHECK_THROWS_AS(den.divide_exact(QPoly::zero()), std::domain_error);
}

TEST_CASE("monomial helpers") {
    Monomial a{{2, 0, 1, 0, 0}};
    Monomial b{{1, 0, 1, 0, 0}};
    CHECK(a.total_degree() == 3);
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(a / b == Monomial{{1, 0, 0, 0, 0}});
    CHECK(a * b == Monomial{{3, 0, 2, 0, 0}});
    MonomialGrlexLess less;
    CHECK(less(b, a));
    // Graded first: t^3 beats q1^2.
    CHECK(less(Monomial{{2, 0, 0, 0, 0}}, Monomial{{0, 0, 0, 0, 3}}));
    // Same degree: q1 beats q2 lexicographically.
    CHECK(less(Monomial{{0, 1, 0, 0, 0}}, Monomial{{1, 0, 0, 0, 0}}));
}
