#include <gtest/gtest.h>

#include <cmath>

#include "qcs/error.hpp"
#include "qcs/exact.hpp"

using namespace qcs;

TEST(Exact, SignOfSqrtForm) {
    for (long a = -30; a <= 30; ++a)
        for (long b = -30; b <= 30; ++b)
            for (long n : {0L, 1L, 2L, 4L, 5L, 9L, 10L}) {
                const long double v = a + b * std::sqrt(static_cast<long double>(n));
                const int expect = std::fabs(v) < 1e-12L ? 0 : (v > 0 ? 1 : -1);
                EXPECT_EQ(sign_sqrt_form(a, b, n), expect) << a << " " << b << " " << n;
            }
    EXPECT_THROW(sign_sqrt_form(1, 1, -1), ValidationError);
}

TEST(Exact, LogRatioSeparation) {
    // log_2 8 = 3 > log_3 9 = 2.
    EXPECT_EQ(log_ratio_greater({8, 0}, 2, {9, 0}, 3), std::optional(true));
    EXPECT_EQ(log_ratio_greater({9, 0}, 3, {8, 0}, 2), std::optional(false));
    // Equal logs cannot be separated.
    EXPECT_EQ(log_ratio_greater({4, 0}, 2, {9, 0}, 3), std::nullopt);
    // 2^(7/2) vs 3^(x): log_2(2^3.5) = 3.5 > log_3(27) = 3.
    EXPECT_EQ(log_ratio_greater({1, Rational(7, 2)}, 2, {27, 0}, 3), std::optional(true));
    // Fractions and shifts together: (1/64) 2^(44/2) = 2^16 vs 2^17 base 2.
    EXPECT_EQ(log_ratio_greater({Rational(1, 64), Rational(22)}, 2, {1, 17}, 2), std::optional(false));
    EXPECT_THROW(log_ratio_greater({0, 0}, 2, {1, 0}, 2), ValidationError);
    EXPECT_THROW(log_ratio_greater({1, 0}, 1, {1, 0}, 2), ValidationError);
}

TEST(Exact, LogOf) {
    EXPECT_NEAR(log_of(Rational(1, 4)), -std::log(4.0), 1e-12);
    EXPECT_THROW(log_of(Rational(0)), ValidationError);
}
