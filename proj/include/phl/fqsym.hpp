#pragma once

#include "phl/combo.hpp"

namespace phl {

// Word-permutation Hopf algebra with the two-parameter (q1, q4) deformation of
// its coproduct and pairing. Basis: permutations; product: shifted shuffle.

// Shifted shuffle, bilinear: interleave the left word with the right word
// shifted up by the left size, one term per choice of positions.
PermCombo shuffle_product(const PermCombo& x, const PermCombo& y);

// Deformed coproduct: cutting the word of sigma after position k contributes
// q1^(k(n-k) - a) q4^a std(left) (x) std(right), a = inv(sigma) - inv(left)
// - inv(right).
PermTensorCombo fqsym_coproduct(const PermCombo& x);

// Deformed pairing: <sigma, tau> = q1^(n(n-1)/2 - inv(sigma)) q4^inv(sigma)
// when tau is the inverse of sigma, else 0. Bilinear; tensors componentwise.
QPoly fqsym_pair(const PermCombo& x, const PermCombo& y);
QPoly fqsym_pair(const PermTensorCombo& x, const PermTensorCombo& y);

// Sum of the linear extensions of each basis poset, linearly extended.
PermCombo theta(const PosetCombo& x);

} // namespace phl
