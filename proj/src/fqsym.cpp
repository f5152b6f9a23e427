#include "phl/fqsym.hpp"

namespace phl {

namespace {

void shuffle_words(const std::vector<int>& a, const std::vector<int>& b, PermCombo& out,
                   const QPoly& coeff) {
    int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    // Choose the positions of the left word among m + n slots.
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> word(static_cast<std::size_t>(m + n));
        std::size_t ai = 0, bi = 0;
        for (int pos = 0; pos < m + n; ++pos) {
            if (ai < idx.size() && idx[ai] == pos)
                word[static_cast<std::size_t>(pos)] = a[ai++];
            else
                word[static_cast<std::size_t>(pos)] = b[bi++];
        }
        out.add(Permutation(word), coeff);
        if (m == 0) break;
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < m; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
    }
}

} // namespace

PermCombo shuffle_product(const PermCombo& x, const PermCombo& y) {
    PermCombo result;
    for (const auto& [sigma, cs] : x.terms()) {
        for (const auto& [tau, ct] : y.terms()) {
            std::vector<int> shifted = tau.word();
            for (int& v : shifted) v += sigma.size();
            shuffle_words(sigma.word(), shifted, result, cs * ct);
        }
    }
    return result;
}

PermTensorCombo fqsym_coproduct(const PermCombo& x) {
    PermTensorCombo result;
    for (const auto& [sigma, c] : x.terms()) {
        int n = sigma.size();
        int total_inv = sigma.inversions();
        const auto& w = sigma.word();
        for (int k = 0; k <= n; ++k) {
            Permutation left = Permutation::standardize({w.begin(), w.begin() + k});
            Permutation right = Permutation::standardize({w.begin() + k, w.end()});
            int a = total_inv - left.inversions() - right.inversions();
            Monomial m;
            m.e[0] = static_cast<std::uint32_t>(k * (n - k) - a);
            m.e[3] = static_cast<std::uint32_t>(a);
            result.add({left, right}, c * QPoly::monomial(m, Int(1)));
        }
    }
    return result;
}

QPoly fqsym_pair(const PermCombo& x, const PermCombo& y) {
    QPoly sum;
    for (const auto& [sigma, cs] : x.terms()) {
        int n = sigma.size();
        int inv = sigma.inversions();
        auto it = y.terms().find(sigma.inverse());
        if (it == y.terms().end()) continue;
        Monomial m;
        m.e[0] = static_cast<std::uint32_t>(n * (n - 1) / 2 - inv);
        m.e[3] = static_cast<std::uint32_t>(inv);
        sum += cs * it->second * QPoly::monomial(m, Int(1));
    }
    return sum;
}

QPoly fqsym_pair(const PermTensorCombo& x, const PermTensorCombo& y) {
    QPoly sum;
    for (const auto& [ab, ca] : x.terms()) {
        PermCombo left_a(ab.first), right_a(ab.second);
        for (const auto& [cd, cb] : y.terms()) {
            sum += ca * cb * fqsym_pair(left_a, PermCombo(cd.first)) *
                   fqsym_pair(right_a, PermCombo(cd.second));
        }
    }
    return sum;
}

PermCombo theta(const PosetCombo& x) {
    PermCombo result;
    for (const auto& [p, c] : x.terms())
        for (const auto& ext : p.linear_extensions()) result.add(ext, c);
    return result;
}

} // namespace phl
