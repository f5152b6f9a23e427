#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace phl {

// A permutation of {1..n} in one-line notation. The empty permutation (n = 0)
// is valid and acts as the unit for concatenation-style constructions.
class Permutation {
public:
    Permutation() = default;
    // Validates that word is a permutation of {1..n}; throws std::invalid_argument.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    // Ranks of a sequence of distinct integers, e.g. (5,3) -> (2,1).
    static Permutation standardize(const std::vector<int>& letters);

    int size() const { return static_cast<int>(word_.size()); }
    // 1-based application: value at position i.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    // (a.compose(b))(i) = a(b(i)); sizes must match.
    Permutation compose(const Permutation& b) const;
    // Number of inversions of the one-line word.
    int inversions() const;

    // Lexicographic order on one-line words (sizes must match for <).
    std::strong_ordering operator<=>(const Permutation& o) const = default;

    // Compact digits for n <= 9 ("213"), comma-separated beyond ("10,2,...").
    std::string to_string() const;

    // All permutations of {1..n} in lexicographic order.
    static const std::vector<Permutation>& all(int n);

private:
    std::vector<int> word_;
};

// n! as unsigned long long; n <= 20.
unsigned long long factorial(int n);

} // namespace phl
