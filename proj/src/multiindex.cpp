#include "pluriloc/multiindex.hpp"

#include <stdexcept>

namespace pluriloc {

namespace {

void emit(int n, int k, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (n == 1) {
        cur.push_back(k);
        out.push_back(MultiIndex{cur});
        cur.pop_back();
        return;
    }
    for (int a = k; a >= 0; --a) {
        cur.push_back(a);
        emit(n - 1, k - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int n, int k) {
    if (n < 1) throw std::invalid_argument("enumerate_multiindices: n >= 1 required");
    if (k < 0) throw std::invalid_argument("enumerate_multiindices: k >= 0 required");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(monomial_count(n, k)));
    std::vector<int> cur;
    emit(n, k, cur, out);
    return out;
}

std::uint64_t monomial_count(int n, int k) {
    // binomial(n+k-1, k) by the multiplicative rule; desk scale, no overflow care needed
    std::uint64_t num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= static_cast<std::uint64_t>(n - 1 + i);
        den *= static_cast<std::uint64_t>(i);
        std::uint64_t g = [](std::uint64_t a, std::uint64_t b) {
            while (b) { a %= b; std::swap(a, b); }
            return a;
        }(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

double multinomial(const MultiIndex& alpha) {
    // k!/alpha! as a product of binomials of partial sums; exact in double at desk scale
    double result = 1.0;
    long long partial = 0;
    for (int a : alpha.entries) {
        for (int i = 1; i <= a; ++i) {
            result *= static_cast<double>(partial + i) / static_cast<double>(i);
        }
        partial += a;
    }
    return result;
}

}  // namespace pluriloc
