#ifndef SPERNER_BITS_HPP
#define SPERNER_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace sperner {

// One subset of [n] = {1,...,n} in a single machine word:
// element i is present iff bit i-1 is set.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool proper_subset_of(Mask a, Mask b) { return a != b && (a & ~b) == 0; }

// Canonical order used everywhere: cardinality first, numeric value second.
inline bool canonical_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
}

// Exact binomial coefficient; valid for 0 <= k <= n <= 64.
std::uint64_t binomial(int n, int k);

inline std::uint64_t central_binomial(int n) { return binomial(n, n / 2); }

// 0-based positions of the set bits, ascending.
std::vector<int> bit_positions(Mask m);

// Calls f(window) for every mask of popcount l over [n], in increasing
// numeric order (Gosper's hack).
template <typename F>
void for_each_window(int n, int l, F&& f) {
    Mask first = (l == 0) ? 0 : (Mask{1} << l) - 1;
    Mask last = full_mask(n) ^ full_mask(n - l);  // the top l bits
    Mask w = first;
    for (;;) {
        f(w);
        if (w == last) break;
        Mask c = w & (~w + 1);
        Mask r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
    }
}

}  // namespace sperner

#endif
