#include "phl/pairing.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace phl {

PhiStats phi_stats(const PlanePoset& p, const PlanePoset& q, const Permutation& sigma) {
    if (p.size() != q.size() || sigma.size() != p.size())
        throw std::invalid_argument("phi_stats: size mismatch");
    PhiStats s;
    int n = p.size();
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
            if (x == y) continue;
            RelationKind rp = p.rel(x, y);
            RelationKind rq = q.rel(sigma(x), sigma(y));
            if (rp == RelationKind::H_LESS) {
                if (rq == RelationKind::H_LESS || rq == RelationKind::H_GREATER) {
                    ++s.phi1;
                    ++s.phi2;
                } else if (rq == RelationKind::R_LESS) {
                    ++s.phi1;
                } else if (rq == RelationKind::R_GREATER) {
                    ++s.phi2;
                }
            } else if (rp == RelationKind::R_LESS) {
                switch (rq) {
                    case RelationKind::H_LESS: ++s.phi1; break;
                    case RelationKind::H_GREATER: ++s.phi2; break;
                    case RelationKind::R_LESS: ++s.phi3; break;
                    case RelationKind::R_GREATER: ++s.phi4; break;
                    case RelationKind::EQUAL: break;
                }
            }
        }
    }
    return s;
}

namespace {

using PairKey = std::pair<std::vector<int>, std::vector<int>>;

template <class Fn>
const QPoly& memoized_pair(const PlanePoset& p, const PlanePoset& q, int which, Fn compute) {
    static std::map<std::pair<int, PairKey>, QPoly> cache;
    static std::mutex mutex;
    std::pair<int, PairKey> key{which, {p.code().word(), q.code().word()}};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(std::move(key), compute()).first->second;
}

bool in_s_prime(const PlanePoset& p, const PlanePoset& q, const Permutation& sigma) {
    int n = p.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (p.rel(i, j) == RelationKind::H_LESS && sigma(i) > sigma(j)) return false;
            if (q.rel(sigma(i), sigma(j)) == RelationKind::H_LESS && i > j) return false;
        }
    }
    return true;
}

bool in_s(const PlanePoset& p, const PlanePoset& q, const Permutation& sigma) {
    int n = p.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (p.rel(i, j) == RelationKind::H_LESS &&
                q.rel(sigma(i), sigma(j)) != RelationKind::R_LESS)
                return false;
            if (q.rel(sigma(i), sigma(j)) == RelationKind::H_LESS &&
                p.rel(i, j) != RelationKind::R_LESS)
                return false;
        }
    }
    return true;
}

} // namespace

const QPoly& pair_first(const PlanePoset& p, const PlanePoset& q) {
    return memoized_pair(p, q, 1, [&] {
        QPoly sum;
        if (p.size() != q.size()) return sum;
        for (const auto& sigma : Permutation::all(p.size())) {
            PhiStats s = phi_stats(p, q, sigma);
            Monomial m;
            m.e[0] = static_cast<std::uint32_t>(s.phi1);
            m.e[1] = static_cast<std::uint32_t>(s.phi2);
            m.e[2] = static_cast<std::uint32_t>(s.phi3);
            m.e[3] = static_cast<std::uint32_t>(s.phi4);
            sum.add_term(m, Int(1));
        }
        return sum;
    });
}

const QPoly& pair_second(const PlanePoset& p, const PlanePoset& q) {
    return memoized_pair(p, q, 2, [&] {
        QPoly sum;
        if (p.size() != q.size()) return sum;
        int n = p.size();
        int half = n * (n - 1) / 2;
        for (const auto& sigma : Permutation::all(n)) {
            if (!in_s_prime(p, q, sigma)) continue;
            int inv = sigma.inversions();
            Monomial m;
            m.e[0] = static_cast<std::uint32_t>(half - inv);
            m.e[3] = static_cast<std::uint32_t>(inv);
            sum.add_term(m, Int(1));
        }
        return sum;
    });
}

QPoly pair(const PlanePoset& p, const PlanePoset& q, Pairing which) {
    return which == Pairing::FIRST ? pair_first(p, q) : pair_second(p, q);
}

QPoly pair(const PosetCombo& x, const PosetCombo& y, Pairing which) {
    QPoly sum;
    for (const auto& [p, cp] : x.terms())
        for (const auto& [q, cq] : y.terms()) sum += cp * cq * pair(p, q, which);
    return sum;
}

QPoly pair(const TensorCombo& x, const TensorCombo& y, Pairing which) {
    QPoly sum;
    for (const auto& [pq, cp] : x.terms())
        for (const auto& [rs, cq] : y.terms())
            sum += cp * cq * pair(pq.first, rs.first, which) * pair(pq.second, rs.second, which);
    return sum;
}

std::vector<Permutation> s_set(const PlanePoset& p, const PlanePoset& q) {
    std::vector<Permutation> result;
    if (p.size() != q.size()) return result;
    for (const auto& sigma : Permutation::all(p.size()))
        if (in_s(p, q, sigma)) result.push_back(sigma);
    return result;
}

std::vector<Permutation> s_prime_set(const PlanePoset& p, const PlanePoset& q) {
    std::vector<Permutation> result;
    if (p.size() != q.size()) return result;
    for (const auto& sigma : Permutation::all(p.size()))
        if (in_s_prime(p, q, sigma)) result.push_back(sigma);
    return result;
}

std::optional<PlanePoset> min_partner(const PlanePoset& p) {
    for (const auto& q : enumerate_posets(p.size()))
        for (const auto& sigma : Permutation::all(p.size()))
            if (in_s(p, q, sigma)) return q;
    return std::nullopt;
}

std::vector<std::vector<QPoly>> gram(int n, Pairing which) {
    const auto& basis = enumerate_posets(n);
    std::size_t size = basis.size();
    std::vector<std::vector<QPoly>> m(size, std::vector<QPoly>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            m[i][j] = pair(basis[i], basis[j], which);
    return m;
}

QPoly gram_det(int n, Pairing which, const std::array<std::optional<Int>, kNumVars>& assignment,
               int max_n) {
    if (n > max_n) throw std::invalid_argument("gram_det: degree exceeds configured bound");
    auto m = gram(n, which);
    for (auto& row : m)
        for (auto& entry : row) entry = entry.specialize(assignment);
    return matrix_det(std::move(m));
}

QPoly matrix_det(std::vector<std::vector<QPoly>> a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix_det: matrix not square");
    if (n == 0) return QPoly::one();
    int sign = 1;
    QPoly prev = QPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return QPoly::zero();
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = QPoly::zero();
        }
        prev = a[k][k];
    }
    QPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

} // namespace phl
