#include "phl/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace phl {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("Permutation: word is not a permutation of {1..n}");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::standardize(const std::vector<int>& letters) {
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardize: letters must be distinct");
    std::vector<int> w;
    w.reserve(letters.size());
    for (int v : letters) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        w.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& b) const {
    if (size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i) - 1] = (*this)(b(i));
    return Permutation(std::move(w));
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if ((*this)(i) > (*this)(j)) ++count;
    return count;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    if (size() <= 9) {
        for (int v : word_) out << v;
    } else {
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) out << ",";
            out << word_[i];
        }
    }
    return out.str();
}

const std::vector<Permutation>& Permutation::all(int n) {
    static std::map<int, std::vector<Permutation>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 0 || n > 10) throw std::invalid_argument("Permutation::all: n out of range [0,10]");
    std::vector<Permutation> result;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        result.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return cache.emplace(n, std::move(result)).first->second;
}

unsigned long long factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range [0,20]");
    unsigned long long r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<unsigned long long>(i);
    return r;
}

} // namespace phl
