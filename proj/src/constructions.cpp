#include "sperner/constructions.hpp"

namespace sperner {

SetFamily level(Ground ground, int i) {
    if (i < 0 || i > ground.n()) throw RangeError("level: cardinality out of range");
    std::vector<Mask> out;
    out.reserve(binomial(ground.n(), i));
    for_each_window(ground.n(), i, [&](Mask w) { out.push_back(w); });
    return SetFamily(ground, std::move(out));
}

SetFamily band(const BandSpec& spec) {
    std::vector<Mask> out;
    for (int i = spec.lo; i <= spec.hi; ++i) {
        for_each_window(spec.ground.n(), i, [&](Mask w) { out.push_back(w); });
    }
    return SetFamily(spec.ground, std::move(out));
}

SetFamily low_levels(Ground ground, int l) {
    if (l < 1 || l > ground.n()) throw RangeError("low_levels: need 1 <= l <= n");
    return band(BandSpec(ground, 0, l - 1));
}

BandSpec midband_spec(Ground ground, int k, int lp) {
    if (lp < 1 || lp >= k) throw RangeError("midband: need 1 <= lp < k");
    int width = k - lp;
    if (width > ground.n()) throw RangeError("midband: band wider than the ground set");
    int lo = (ground.n() - width) / 2 + 1;
    return BandSpec(ground, lo, lo + width - 1);
}

SetFamily midband(Ground ground, int k, int lp) { return band(midband_spec(ground, k, lp)); }

}  // namespace sperner
