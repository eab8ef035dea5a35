#include "sperner/bits.hpp"

#include "sperner/errors.hpp"

namespace sperner {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 64)
        throw RangeError("binomial: need 0 <= k <= n <= 64");
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (std::uint64_t)(n - k + i) / (std::uint64_t)i;
    }
    return (std::uint64_t)r;
}

std::vector<int> bit_positions(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace sperner
