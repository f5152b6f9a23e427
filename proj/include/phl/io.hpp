#pragma once

#include <string>
#include <vector>

#include "phl/combo.hpp"

namespace phl {

// Text grammar. Posets: "p:" followed by the code word, digits for degrees up
// to nine ("p:213") and comma-separated integers beyond ("p:10,2,1,...");
// "p:" alone is the empty poset. Permutations: same word forms behind "s:".
// Subsets: "{1,3,4}" or "{}". Polynomials: integer coefficients, variables
// q1..q4 and t, operators "*", "^", "+", "-"; whitespace-insensitive.
// All parsers throw std::invalid_argument naming the offending 0-based
// character position; every printer output parses back to an equal value.

PlanePoset parse_poset(const std::string& text);
Permutation parse_perm(const std::string& text);
Subset parse_subset(const std::string& text);
QPoly parse_poly(const std::string& text);

// One term per line, "(<coeff>) <basis>", tensor factors joined by "(x)";
// the zero combo prints "0".
std::string combo_to_text(const PosetCombo& x);
std::string combo_to_text(const TensorCombo& x);
std::string combo_to_text(const PermCombo& x);
std::string combo_to_text(const PermTensorCombo& x);

// Header "basis,coeff" (tensors: "left,right,coeff"), one row per term; cells
// are quoted only when they contain a comma or quote.
std::string combo_to_csv(const PosetCombo& x);
std::string combo_to_csv(const TensorCombo& x);
std::string combo_to_csv(const PermCombo& x);
std::string combo_to_csv(const PermTensorCombo& x);

// Schema: {"terms":[{"basis":"213","coeff":"q1*q3^2"}]}; tensor basis entries
// are two-element arrays ["21","1"]. Exact round-trip with the *_from_json
// readers below.
std::string combo_to_json(const PosetCombo& x);
std::string combo_to_json(const TensorCombo& x);
std::string combo_to_json(const PermCombo& x);
std::string combo_to_json(const PermTensorCombo& x);

PosetCombo poset_combo_from_json(const std::string& text);
TensorCombo tensor_combo_from_json(const std::string& text);
PermCombo perm_combo_from_json(const std::string& text);
PermTensorCombo perm_tensor_combo_from_json(const std::string& text);

// Gram matrix renderers. CSV: header row of basis code words with an empty
// first cell, then one labeled row per basis element. JSON adds the degree
// and the pairing name.
std::string gram_to_csv(const std::vector<std::vector<QPoly>>& entries,
                        const std::vector<PlanePoset>& basis);
std::string gram_to_json(int degree, const std::string& pairing_name,
                         const std::vector<std::vector<QPoly>>& entries,
                         const std::vector<PlanePoset>& basis);

} // namespace phl
