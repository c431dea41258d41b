#include <cstdint>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "groemer/params.hpp"

using namespace groemer;

TEST(Decompose, Examples) {
    EXPECT_EQ(decompose(1541551), (HexParams{717, 2, 0}));
    EXPECT_EQ(decompose(1), (HexParams{1, 0, 0}));
    EXPECT_EQ(decompose(121), (HexParams{6, 5, 0}));
    EXPECT_EQ(decompose(7), (HexParams{2, 0, 0}));
    EXPECT_EQ(decompose(6), (HexParams{1, 5, 0}));
}

TEST(Decompose, MatchesLinearScan) {
    for (integer n = 1; n <= 200000; ++n) {
        ASSERT_EQ(decompose(n), reference::scan_decompose(n)) << n;
    }
}

TEST(Decompose, RoundTripMaximalityAndMonotone) {
    integer last_a = 1;
    for (integer n = 1; n <= 300000; ++n) {
        const HexParams p = decompose(n);
        ASSERT_TRUE(p.valid());
        ASSERT_EQ(recompose(p), n);
        ASSERT_GT(1 + 3 * (p.a + 1) * p.a, n);
        if (p.b < 5) {
            ASSERT_GT(recompose(HexParams{p.a, p.b + 1, 0}), n);
        }
        ASSERT_GE(p.a, last_a);
        last_a = p.a;
    }
}

TEST(Decompose, LargeInputsStayExact) {
    // a = 10^9: n = 3a^2 - 3a + 1 + a*b + c.
    const integer a = 1000000000;
    const HexParams p{a, 3, 17};
    EXPECT_EQ(decompose(recompose(p)), p);
    const integer near_limit = std::numeric_limits<integer>::max() / 12;
    EXPECT_EQ(recompose(decompose(near_limit)), near_limit);
    const integer top = std::numeric_limits<integer>::max();
    EXPECT_EQ(recompose(decompose(top)), top);
    EXPECT_THROW(recompose(HexParams{4000000000LL, 0, 0}), std::overflow_error);
}

TEST(Decompose, RejectsNonPositive) {
    EXPECT_THROW(decompose(0), std::invalid_argument);
    EXPECT_THROW(decompose(-4), std::invalid_argument);
}

TEST(Recompose, Examples) {
    EXPECT_EQ(recompose(HexParams{717, 2, 0}), 1541551);
    EXPECT_EQ(recompose(HexParams{1, 0, 0}), 1);
    EXPECT_EQ(recompose(HexParams{2, 0, 0}), 7);
}

TEST(Recompose, RejectsInvalid) {
    EXPECT_THROW(recompose(HexParams{0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(recompose(HexParams{3, 6, 0}), std::invalid_argument);
    EXPECT_THROW(recompose(HexParams{3, 1, 3}), std::invalid_argument);
    EXPECT_THROW(recompose(HexParams{1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(recompose(HexParams{3, -1, 0}), std::invalid_argument);
}

TEST(P0, FromParamsExamples) {
    EXPECT_EQ(p0_of_params(HexParams{717, 2, 0}), 4299);
    EXPECT_EQ(p0_of_params(HexParams{1, 0, 0}), 0);
    EXPECT_EQ(p0_of_params(HexParams{6, 5, 0}), 36);
}

TEST(P0, FromNExamples) {
    EXPECT_EQ(p0_of_n(1541551), 4299);
    EXPECT_EQ(p0_of_n(2), 2);
    EXPECT_EQ(p0_of_n(1), 0);
    EXPECT_THROW(p0_of_n(0), std::invalid_argument);
}

TEST(P0, BothFormulasAgree) {
    for (integer n = 1; n <= 300000; ++n) {
        ASSERT_EQ(p0_of_n(n), p0_of_params(decompose(n))) << n;
    }
}
