#include <doctest.h>

#include "sperner/constructions.hpp"
#include "oracles.hpp"

using namespace sperner;

TEST_CASE("levels") {
    CHECK(level(Ground(4), 2).size() == 6);
    CHECK(level(Ground(5), 0) == SetFamily(Ground(5), {0}));
    CHECK(level(Ground(5), 5) == SetFamily(Ground(5), {full_mask(5)}));
    CHECK_THROWS_AS(level(Ground(4), 5), RangeError);
    SetFamily mid = level(Ground(6), 3);
    for (Mask m : mid.members()) CHECK(popcount(m) == 3);
}

TEST_CASE("bands") {
    CHECK(band(BandSpec(Ground(4), 2, 3)).size() == 10);
    CHECK(band(BandSpec(Ground(4), 2, 2)) == level(Ground(4), 2));
    CHECK_THROWS_AS(BandSpec(Ground(4), 3, 2), RangeError);
    CHECK_THROWS_AS(BandSpec(Ground(4), 0, 5), RangeError);

    SUBCASE("size equals the binomial sum of its levels") {
        for (int n = 1; n <= 10; ++n) {
            for (int lo = 0; lo <= n; ++lo) {
                for (int hi = lo; hi <= n; ++hi) {
                    std::uint64_t want = 0;
                    for (int i = lo; i <= hi; ++i) want += binomial(n, i);
                    CHECK(band(BandSpec(Ground(n), lo, hi)).size() == want);
                }
            }
        }
    }
}

TEST_CASE("low levels") {
    CHECK(low_levels(Ground(5), 1) == SetFamily(Ground(5), {0}));
    CHECK(low_levels(Ground(4), 2).size() == 5);
    CHECK_THROWS_AS(low_levels(Ground(4), 0), RangeError);

    SUBCASE("size identity") {
        for (int n = 1; n <= 12; ++n) {
            for (int l = 1; l <= n; ++l) {
                std::uint64_t want = 0;
                for (int i = 0; i < l; ++i) want += binomial(n, i);
                CHECK(low_levels(Ground(n), l).size() == want);
            }
        }
    }
    SUBCASE("complement map gives the high levels") {
        for (int n = 2; n <= 8; ++n) {
            for (int l = 1; l <= n; ++l) {
                SetFamily high = complement_family(low_levels(Ground(n), l));
                CHECK(high == band(BandSpec(Ground(n), n - l + 1, n)));
            }
        }
    }
    SUBCASE("windowed Sperner exactly when k reaches l") {
        for (int n = 2; n <= 8; ++n) {
            for (int l = 1; l <= 3 && l <= n; ++l) {
                SetFamily f = low_levels(Ground(n), l);
                for (int k = 1; k <= l + 1; ++k) {
                    CHECK(is_trace_sperner(f, TraceProblem(Ground(n), l, k)) == (k >= l));
                }
            }
        }
    }
}

TEST_CASE("midband") {
    CHECK(midband(Ground(6), 2, 1) == level(Ground(6), 3));
    CHECK(midband(Ground(6), 2, 1).size() == 20);
    CHECK_THROWS_AS(midband(Ground(6), 2, 2), RangeError);
    CHECK_THROWS_AS(midband(Ground(2), 5, 1), RangeError);

    SUBCASE("spec matches the per-summand floor formula") {
        for (int n = 1; n <= 12; ++n) {
            for (int k = 2; k <= 5; ++k) {
                for (int lp = 1; lp < k; ++lp) {
                    if (k - lp > n) continue;
                    BandSpec spec = midband_spec(Ground(n), k, lp);
                    std::uint64_t formula = 0;
                    for (int i = 1; i <= k - lp; ++i) {
                        int idx = (n - (k - lp)) / 2 + i;
                        if (idx >= 0 && idx <= n) formula += binomial(n, idx);
                    }
                    CHECK(band(spec).size() == formula);
                }
            }
        }
    }
}

TEST_CASE("every placement of the band construction is trace-Sperner") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 2; k <= 4; ++k) {
            for (int lp = 1; lp < k && lp < n; ++lp) {
                int w = k - lp;
                if (w > n) continue;
                for (int a = 0; a + w <= n; ++a) {
                    SetFamily f = band(BandSpec(Ground(n), a + 1, a + w));
                    CHECK(is_trace_sperner(f, TraceProblem::co(Ground(n), lp, k)));
                }
            }
        }
    }
}
