#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "phl/bigint.hpp"

namespace phl {

// Exact sparse polynomials over Z in the deformation parameters q1..q4 plus a
// spare variable t used for one-parameter families. All operations are pure;
// values are safe to share across threads once constructed.

inline constexpr std::size_t kNumVars = 5;

enum class Var : std::uint8_t { Q1 = 0, Q2 = 1, Q3 = 2, Q4 = 3, T = 4 };

const char* var_name(Var v);

// Exponent vector of a single monomial.
struct Monomial {
    std::array<std::uint32_t, kNumVars> e{};

    std::uint64_t total_degree() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    // Caller must ensure divisibility.
    Monomial operator/(const Monomial& m) const;
    bool operator==(const Monomial& m) const = default;
};

// Graded lexicographic order, q1 > q2 > q3 > q4 > t.
struct MonomialGrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Int constant);
    explicit QPoly(long constant) : QPoly(Int(constant)) {}

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Int(1)); }
    static QPoly variable(Var v, std::uint32_t power = 1);
    static QPoly monomial(Monomial m, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    // -1 for the zero polynomial.
    long total_degree() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

    QPoly pow(std::uint32_t n) const;

    // Adds coeff * m, pruning a resulting zero.
    void add_term(const Monomial& m, const Int& coeff);

    // Exact full-point evaluation.
    Rational eval(const std::array<Rational, kNumVars>& point) const;

    // Partial substitution of integer values; untouched variables survive.
    QPoly specialize(const std::array<std::optional<Int>, kNumVars>& assignment) const;

    // Simultaneous substitution of each variable by a coefficient-1 monomial
    // (e.g. q1 -> t*q1, or the swap q3 <-> q4). Ring morphism.
    QPoly substitute_vars(const std::array<Monomial, kNumVars>& images) const;

    // Quotient of an exact division; throws std::domain_error if not divisible.
    QPoly divide_exact(const QPoly& divisor) const;

    // Terms in descending grlex order, "*" for products, "^" for powers,
    // e.g. "q1^2 + q1*q2 + q2^2", "-q1 + 2", "0".
    std::string to_string() const;

    const std::map<Monomial, Int, MonomialGrlexLess>& terms() const { return terms_; }

private:
    // Invariant: no zero coefficients.
    std::map<Monomial, Int, MonomialGrlexLess> terms_;
};

inline QPoly operator*(const Int& c, const QPoly& p) { return QPoly(c) * p; }

// Identity substitution map, to be modified per use.
std::array<Monomial, kNumVars> identity_var_images();
// Convenience: images sending each listed variable to another variable.
std::array<Monomial, kNumVars> swap_var_images(Var a, Var b);

} // namespace phl
