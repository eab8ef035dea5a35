#ifndef SPERNER_CONSTRUCTIONS_HPP
#define SPERNER_CONSTRUCTIONS_HPP

#include "sperner/family.hpp"

namespace sperner {

// Consecutive cardinality range lo..hi (inclusive) over a ground set.
struct BandSpec {
    Ground ground;
    int lo;
    int hi;

    BandSpec(Ground g, int lo_, int hi_) : ground(g), lo(lo_), hi(hi_) {
        if (lo < 0 || lo > hi || hi > g.n())
            throw RangeError("band: need 0 <= lo <= hi <= n");
    }
};

// All i-subsets of [n].
SetFamily level(Ground ground, int i);

// Union of the full levels lo..hi.
SetFamily band(const BandSpec& spec);

// All sets of cardinality at most l-1.
SetFamily low_levels(Ground ground, int l);

// The band of k-lp consecutive levels starting just above floor((n-(k-lp))/2);
// the extremal candidate for the co-window trace-Sperner problem. Requires
// 1 <= lp < k and k-lp <= n.
SetFamily midband(Ground ground, int k, int lp);

// Cardinality range of midband without materializing it.
BandSpec midband_spec(Ground ground, int k, int lp);

}  // namespace sperner

#endif
