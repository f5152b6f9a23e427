#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "phl/perm.hpp"

using namespace phl;

TEST_CASE("construction validates the word") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_NOTHROW(Permutation(std::vector<int>{}));
    CHECK_THROWS_AS(Permutation({2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("identity and application") {
    Permutation id = Permutation::identity(4);
    CHECK(id.size() == 4);
    for (int i = 1; i <= 4; ++i) CHECK(id(i) == i);
    Permutation s({2, 4, 1, 3});
    CHECK(s(1) == 2);
    CHECK(s(4) == 3);
    CHECK(s.word() == std::vector<int>{2, 4, 1, 3});
}

TEST_CASE("standardize ranks distinct letters") {
    CHECK(Permutation::standardize({5, 2, 8}) == Permutation({2, 1, 3}));
    CHECK(Permutation::standardize({5, 3}) == Permutation({2, 1}));
    CHECK(Permutation::standardize({7}) == Permutation({1}));
    CHECK(Permutation::standardize({}) == Permutation());
    CHECK(Permutation::standardize({4, 1, 3, 2}) == Permutation({4, 1, 3, 2}));
}

TEST_CASE("inverse and composition") {
    Permutation s({2, 3, 1});
    CHECK(s.inverse() == Permutation({3, 1, 2}));
    CHECK(s.compose(s.inverse()) == Permutation::identity(3));
    CHECK(s.inverse().compose(s) == Permutation::identity(3));
    Permutation a({2, 1, 3});
    Permutation b({1, 3, 2});
    // (a.compose(b))(i) = a(b(i)).
    CHECK(a.compose(b) == Permutation({2, 3, 1}));
    CHECK(b.compose(a) == Permutation({3, 1, 2}));
    CHECK(Permutation().inverse() == Permutation());
}

TEST_CASE("inversion counts") {
    CHECK(Permutation({1, 2, 3}).inversions() == 0);
    CHECK(Permutation({2, 1}).inversions() == 1);
    CHECK(Permutation({3, 2, 1}).inversions() == 3);
    CHECK(Permutation({2, 4, 1, 3}).inversions() == 3);
    CHECK(Permutation({3, 1, 4, 2}).inversions() == 3);
    CHECK(Permutation().inversions() == 0);
}

TEST_CASE("lexicographic enumeration") {
    const auto& all3 = Permutation::all(3);
    REQUIRE(all3.size() == 6);
    CHECK(all3.front() == Permutation({1, 2, 3}));
    CHECK(all3[1] == Permutation({1, 3, 2}));
    CHECK(all3.back() == Permutation({3, 2, 1}));
    for (std::size_t i = 1; i < all3.size(); ++i) CHECK(all3[i - 1] < all3[i]);
    CHECK(Permutation::all(0).size() == 1);
    CHECK(Permutation::all(4).size() == 24);
}

TEST_CASE("printing") {
    CHECK(Permutation({2, 1, 3}).to_string() == "213");
    CHECK(Permutation().to_string().empty());
    std::vector<int> big{10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(Permutation(big).to_string() == "10,1,2,3,4,5,6,7,8,9");
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1ULL);
    CHECK(factorial(1) == 1ULL);
    CHECK(factorial(4) == 24ULL);
    CHECK(factorial(6) == 720ULL);
    CHECK(factorial(10) == 3628800ULL);
}
