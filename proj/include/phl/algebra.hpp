#pragma once

#include <array>
#include <vector>

#include "phl/combo.hpp"

namespace phl {

// The four deformation parameters of the product/coproduct. Slot k carries the
// weight whose exponent is the kth cross-pair statistic of a split R = P | I
// (P the left/outer block, I the right/inner block):
//   slot 1: h pairs from P into I      slot 2: h pairs from I into P
//   slot 3: r pairs from P into I      slot 4: r pairs from I into P
// Generic slots are the variables q1..q4; arbitrary polynomial values support
// substituted families such as (t*q1, t*q2, q3, q4) or (q1, 0, q1, q4).
struct DeformParams {
    QPoly s1, s2, s3, s4;

    static DeformParams generic();
    // Values given as polynomials, in slot order.
    static DeformParams of(QPoly a, QPoly b, QPoly c, QPoly d);

    QPoly weight(const std::array<int, 4>& exps) const;
};

// Parameter-free gluing data: all ways to assemble a degree-(m+n) poset from
// an ordered pair of subposets, with the four cross-pair statistics.
struct GluingTerm {
    PlanePoset whole;
    Subset inner;               // the subset carrying the right factor
    std::array<int, 4> exps;    // statistics of the split, in slot order
};

// All (R, I) with restrict(R, complement) = p and restrict(R, I) = q; memoized.
const std::vector<GluingTerm>& product_gluings(const PlanePoset& p, const PlanePoset& q);

// Deformed product: sum over gluings of weight * R. Bilinear in the combos.
PosetCombo product_q(const PosetCombo& x, const PosetCombo& y,
                     const DeformParams& params = DeformParams::generic());

// Deformed coproduct: sum over subsets I of weight * (P \ I) (x) I.
TensorCombo coproduct_q(const PosetCombo& x,
                        const DeformParams& params = DeformParams::generic());

// Coefficient of the empty poset.
QPoly counit(const PosetCombo& x);

// Undeformed bilinear products on combos.
PosetCombo concat_product(const PosetCombo& x, const PosetCombo& y);
PosetCombo over_product(const PosetCombo& x, const PosetCombo& y);

// Braiding: each P (x) Q maps to base^(|P||Q|) Q (x) P.
TensorCombo braid(const TensorCombo& x, const QPoly& base = QPoly::variable(Var::Q4));

// Apply a transform linearly.
PosetCombo apply_transform(const PosetCombo& x, Transform t);
TensorCombo apply_transform(const TensorCombo& x, Transform t);

// Swap tensor factors without braiding weight.
TensorCombo swap_factors(const TensorCombo& x);

// Pointwise tensor product of two combos.
TensorCombo tensor(const PosetCombo& x, const PosetCombo& y);

// Weight rescalings: P -> base^(h_total) P and P -> base^(r_total) P.
PosetCombo h_weight_rescale(const PosetCombo& x, const QPoly& base = QPoly::variable(Var::T));
PosetCombo r_weight_rescale(const PosetCombo& x, const QPoly& base = QPoly::variable(Var::T));

} // namespace phl
