#pragma once

#include <cstdint>
#include <vector>

namespace pluriloc {

// Exponent vector alpha with |alpha| = sum of entries.
struct MultiIndex {
    std::vector<int> entries;

    int order() const {
        int s = 0;
        for (int e : entries) s += e;
        return s;
    }
    int dimension() const { return static_cast<int>(entries.size()); }

    bool operator==(const MultiIndex& o) const { return entries == o.entries; }
};

// All alpha in N^n with |alpha| = k, graded-lexicographic:
// first entry descending, ties broken recursively. (n=2,k=2) -> (2,0),(1,1),(0,2).
std::vector<MultiIndex> enumerate_multiindices(int n, int k);

// binomial(n+k-1, k), the number of degree-k monomials in n variables.
std::uint64_t monomial_count(int n, int k);

// Multinomial coefficient k!/alpha! for |alpha| = k.
double multinomial(const MultiIndex& alpha);

}  // namespace pluriloc
