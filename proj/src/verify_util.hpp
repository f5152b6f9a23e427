#pragma once

// Shared helpers for the verification suites: compact one-line rendering of
// combinations for counterexample messages, and small iteration utilities.

#include <sstream>
#include <string>
#include <vector>

#include "phl/algebra.hpp"
#include "phl/combo.hpp"
#include "phl/poset.hpp"

namespace phl::detail {

template <typename Basis, typename Less>
std::string inline_text(const LinearCombo<Basis, Less>& x,
                        std::string (*label)(const Basis&)) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [basis, coeff] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << coeff.to_string() << ") " << label(basis);
    }
    return out.str();
}

inline std::string poset_label(const PlanePoset& p) { return p.to_string(); }

inline std::string poset_pair_label(const std::pair<PlanePoset, PlanePoset>& t) {
    return t.first.to_string() + " (x) " + t.second.to_string();
}

inline std::string perm_label(const Permutation& s) {
    return "s:" + s.to_string();
}

inline std::string perm_pair_label(const std::pair<Permutation, Permutation>& t) {
    return perm_label(t.first) + " (x) " + perm_label(t.second);
}

inline std::string inline_text(const PosetCombo& x) {
    return inline_text(x, &poset_label);
}
inline std::string inline_text(const TensorCombo& x) {
    return inline_text(x, &poset_pair_label);
}
inline std::string inline_text(const PermCombo& x) {
    return inline_text(x, &perm_label);
}
inline std::string inline_text(const PermTensorCombo& x) {
    return inline_text(x, &perm_pair_label);
}

// Reports one mismatch: "<context>: lhs = ..., rhs = ...".
template <typename T>
std::string mismatch(const std::string& context, const T& lhs, const T& rhs) {
    return context + ": lhs = " + inline_text(lhs) + ", rhs = " + inline_text(rhs);
}

inline std::string mismatch_poly(const std::string& context, const QPoly& lhs,
                                 const QPoly& rhs) {
    return context + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
}

// All plane posets of every degree from 1 to bound, flattened.
inline std::vector<PlanePoset> posets_up_to(int bound) {
    std::vector<PlanePoset> all;
    for (int n = 1; n <= bound; ++n)
        for (const auto& p : enumerate_posets(n)) all.push_back(p);
    return all;
}

} // namespace phl::detail
