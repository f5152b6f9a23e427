#include "phl/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace phl {

const char* var_name(Var v) {
    switch (v) {
        case Var::Q1: return "q1";
        case Var::Q2: return "q2";
        case Var::Q3: return "q3";
        case Var::Q4: return "q4";
        case Var::T: return "t";
    }
    throw std::invalid_argument("var_name: bad variable");
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = e[i] + m.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = e[i] - m.e[i];
    return r;
}

bool MonomialGrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

QPoly::QPoly(Int constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

QPoly QPoly::variable(Var v, std::uint32_t power) {
    Monomial m;
    m.e[static_cast<std::size_t>(v)] = power;
    return monomial(m, Int(1));
}

QPoly QPoly::monomial(Monomial m, Int coeff) {
    QPoly p;
    if (coeff != 0) p.terms_.emplace(m, std::move(coeff));
    return p;
}

bool QPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
           terms_.begin()->second == 1;
}

long QPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.rbegin()->first.total_degree());
}

void QPoly::add_term(const Monomial& m, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    r += o;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r = *this;
    r -= o;
    return r;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly QPoly::pow(std::uint32_t n) const {
    QPoly r = one();
    for (std::uint32_t i = 0; i < n; ++i) r *= *this;
    return r;
}

Rational QPoly::eval(const std::array<Rational, kNumVars>& point) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < kNumVars; ++i)
            for (std::uint32_t k = 0; k < m.e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

QPoly QPoly::specialize(const std::array<std::optional<Int>, kNumVars>& assignment) const {
    QPoly r;
    for (const auto& [m, c] : terms_) {
        Int coeff = c;
        Monomial rest;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (assignment[i].has_value()) {
                for (std::uint32_t k = 0; k < m.e[i] && coeff != 0; ++k)
                    coeff *= *assignment[i];
                if (coeff == 0) break;
            } else {
                rest.e[i] = m.e[i];
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

QPoly QPoly::substitute_vars(const std::array<Monomial, kNumVars>& images) const {
    QPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial img;
        for (std::size_t i = 0; i < kNumVars; ++i)
            for (std::size_t j = 0; j < kNumVars; ++j)
                img.e[j] += m.e[i] * images[i].e[j];
        r.add_term(img, c);
    }
    return r;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero");
    QPoly quotient;
    QPoly rem = *this;
    const auto& [dm, dc] = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (!dm.divides(rm) || rc % dc != 0)
            throw std::domain_error("divide_exact: not divisible");
        Monomial qm = rm / dm;
        Int qc = rc / dc;
        quotient.add_term(qm, qc);
        rem -= QPoly::monomial(qm, qc) * divisor;
    }
    return quotient;
}

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending grlex.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = m.total_degree() > 0;
        bool wrote_factor = false;
        if (abs != 1 || !has_vars) {
            out << abs.str();
            wrote_factor = true;
        }
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (wrote_factor) out << "*";
            out << var_name(static_cast<Var>(i));
            if (m.e[i] > 1) out << "^" << m.e[i];
            wrote_factor = true;
        }
    }
    return out.str();
}

std::array<Monomial, kNumVars> identity_var_images() {
    std::array<Monomial, kNumVars> images{};
    for (std::size_t i = 0; i < kNumVars; ++i) images[i].e[i] = 1;
    return images;
}

std::array<Monomial, kNumVars> swap_var_images(Var a, Var b) {
    auto images = identity_var_images();
    std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
    return images;
}

} // namespace phl
