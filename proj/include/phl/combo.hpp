#pragma once

#include <map>
#include <utility>

#include "phl/perm.hpp"
#include "phl/poset.hpp"
#include "phl/qpoly.hpp"

namespace phl {

// Formal Z[q1..q4,t]-linear combination of basis elements. The basis type
// needs a strict total order; map iteration gives the canonical term order.
template <class Basis, class Less = std::less<Basis>>
class LinearCombo {
public:
    LinearCombo() = default;
    explicit LinearCombo(Basis b) { terms_.emplace(std::move(b), QPoly::one()); }
    LinearCombo(Basis b, QPoly coeff) { add(std::move(b), std::move(coeff)); }

    void add(Basis b, const QPoly& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(std::move(b), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinearCombo operator+(const LinearCombo& o) const {
        LinearCombo r = *this;
        for (const auto& [b, c] : o.terms_) r.add(b, c);
        return r;
    }

    LinearCombo operator-(const LinearCombo& o) const {
        LinearCombo r = *this;
        for (const auto& [b, c] : o.terms_) r.add(b, -c);
        return r;
    }

    LinearCombo operator*(const QPoly& scalar) const {
        LinearCombo r;
        for (const auto& [b, c] : terms_) r.add(b, c * scalar);
        return r;
    }

    bool operator==(const LinearCombo& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    QPoly coefficient(const Basis& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? QPoly::zero() : it->second;
    }

    LinearCombo specialize(const std::array<std::optional<Int>, kNumVars>& assignment) const {
        LinearCombo r;
        for (const auto& [b, c] : terms_) r.add(b, c.specialize(assignment));
        return r;
    }

    LinearCombo substitute_vars(const std::array<Monomial, kNumVars>& images) const {
        LinearCombo r;
        for (const auto& [b, c] : terms_) r.add(b, c.substitute_vars(images));
        return r;
    }

    const std::map<Basis, QPoly, Less>& terms() const { return terms_; }

private:
    std::map<Basis, QPoly, Less> terms_;
};

struct PosetLexLess {
    bool operator()(const PlanePoset& a, const PlanePoset& b) const { return lex_less(a, b); }
};

struct PosetPairLess {
    bool operator()(const std::pair<PlanePoset, PlanePoset>& a,
                    const std::pair<PlanePoset, PlanePoset>& b) const {
        if (lex_less(a.first, b.first)) return true;
        if (lex_less(b.first, a.first)) return false;
        return lex_less(a.second, b.second);
    }
};

struct PermSizeLexLess {
    bool operator()(const Permutation& a, const Permutation& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.word() < b.word();
    }
};

struct PermPairLess {
    bool operator()(const std::pair<Permutation, Permutation>& a,
                    const std::pair<Permutation, Permutation>& b) const {
        PermSizeLexLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

using PosetCombo = LinearCombo<PlanePoset, PosetLexLess>;
using TensorCombo = LinearCombo<std::pair<PlanePoset, PlanePoset>, PosetPairLess>;
using PermCombo = LinearCombo<Permutation, PermSizeLexLess>;
using PermTensorCombo = LinearCombo<std::pair<Permutation, Permutation>, PermPairLess>;

} // namespace phl
