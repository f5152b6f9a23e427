#pragma once

#include <optional>
#include <vector>

#include "phl/algebra.hpp"

namespace phl {

// Crossing statistics of a bijection sigma : P -> Q over ordered pairs (x,y)
// of distinct elements of P, with strict relations throughout:
//   phi1 = #{x<_h y, sx<_h sy} + #{x<_h y, sx>_h sy} + #{x<_h y, sx<_r sy}
//                                                    + #{x<_r y, sx<_h sy}
//   phi2 = #{x<_h y, sx<_h sy} + #{x<_h y, sx>_h sy} + #{x<_h y, sx>_r sy}
//                                                    + #{x<_r y, sx>_h sy}
//   phi3 = #{x<_r y, sx<_r sy}
//   phi4 = #{x<_r y, sx>_r sy}
struct PhiStats {
    int phi1 = 0, phi2 = 0, phi3 = 0, phi4 = 0;
    bool operator==(const PhiStats&) const = default;
};

PhiStats phi_stats(const PlanePoset& p, const PlanePoset& q, const Permutation& sigma);

enum class Pairing { FIRST, SECOND };

// First pairing: sum over all bijections of q1^phi1 q2^phi2 q3^phi3 q4^phi4.
// Zero when degrees differ. Symbolic in q1..q4; memoized on basis pairs.
const QPoly& pair_first(const PlanePoset& p, const PlanePoset& q);

// Second pairing: sum over the rigid bijection set of q1^(n(n-1)/2 - inv)
// q4^inv, where inv is the inversion count of the bijection word. Symbolic in
// q1, q4; memoized.
const QPoly& pair_second(const PlanePoset& p, const PlanePoset& q);

QPoly pair(const PlanePoset& p, const PlanePoset& q, Pairing which);

// Bilinear extensions; tensors pair componentwise.
QPoly pair(const PosetCombo& x, const PosetCombo& y, Pairing which);
QPoly pair(const TensorCombo& x, const TensorCombo& y, Pairing which);

// Bijections sigma with (x <=_h y in P => sx <=_r sy in Q) and
// (sx <=_h sy in Q => x <=_r y in P), as words, in lexicographic order.
std::vector<Permutation> s_set(const PlanePoset& p, const PlanePoset& q);

// Same with the total order on the right of each implication; the summation
// set of the second pairing.
std::vector<Permutation> s_prime_set(const PlanePoset& p, const PlanePoset& q);

// First poset in enumeration order with nonempty s_set(p, .).
std::optional<PlanePoset> min_partner(const PlanePoset& p);

// Symmetric matrix of pairings over enumerate_posets(n) in enumeration order.
std::vector<std::vector<QPoly>> gram(int n, Pairing which);

// Determinant of the Gram matrix after an optional partial specialization.
// Fraction-free elimination; n <= max_n (enumeration size n! rows).
QPoly gram_det(int n, Pairing which,
               const std::array<std::optional<Int>, kNumVars>& assignment = {},
               int max_n = 4);

// Determinant of a square polynomial matrix by fraction-free elimination with
// row pivoting; exact at every step.
QPoly matrix_det(std::vector<std::vector<QPoly>> m);

} // namespace phl
