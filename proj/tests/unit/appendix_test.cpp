#include "posetsat/appendix.hpp"
#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"

#include <gtest/gtest.h>

using namespace posetsat;

TEST(LogConcavity, Grids) {
    for (long n : {1L, 2L, 3L, 10L, 200L}) {
        EXPECT_TRUE(check_log_concavity(n).passed()) << n;
    }
    EXPECT_TRUE(check_log_concavity(6, 4).passed());
}

TEST(RatioBounds, SmallN) {
    for (long n = 5; n <= 40; ++n) {
        CheckReport report = check_ratio_bounds(n);
        EXPECT_TRUE(report.passed()) << n << " " << report.to_json().dump();
    }
    EXPECT_THROW(check_ratio_bounds(4), ValidationError);
}

TEST(SpreadWeight, TotalsMatchLevelSize) {
    // Every element of level i+1 hands out weight 1, so slice-weighted totals
    // add up to |L_{i+1}|.
    const long n = 6;
    for (long i = 1; i < n; ++i) {
        Rational total = 0;
        for (long s = 0; s <= i / 2; ++s) {
            total += spread_weight(n, i, s) * Rational(level_slice_size(n, i, s));
        }
        EXPECT_EQ(total, Rational(multiset_level(n, i + 1))) << i;
    }
}

TEST(GrowthExponent, ApproachesQuarter) {
    double e = subspace_growth_exponent(60, 2);
    EXPECT_GT(e, 0.25);
    EXPECT_LT(e, 0.27);
}
