#include <gtest/gtest.h>

#include "qcs/error.hpp"
#include "qcs/order.hpp"
#include "test_util.hpp"

using namespace qcs;
using namespace qcs::test;

namespace {
PrimeIdeal two_adic(const Field& g) { return factor_rational_prime(g, 2).primes[0]; }
}  // namespace

TEST(Order, OrdModExamples) {
    const Field g = Field::make(-1);
    EXPECT_EQ(ord_mod(q(g, 3), prime_above(g, 5, 2).hnf), 4);
    EXPECT_EQ(ord_mod(e(g, "1+w"), Ideal::principal(q(g, 3))), 8);
    EXPECT_EQ(ord_mod(q(g, 1), Ideal::principal(e(g, "7+2*w"))), 1);
    EXPECT_THROW(ord_mod(q(g, 2), two_adic(g).hnf.pow(3)), ValidationError);
    EXPECT_EQ(ord_mod(q(g, 5), Ideal::unit(g)), 1);
}

TEST(Order, UnitModIdeal) {
    const Field g = Field::make(-1);
    EXPECT_TRUE(is_unit_mod(q(g, 3), Ideal::unit(g)));
    EXPECT_TRUE(is_unit_mod(q(g, 3), two_adic(g).hnf.pow(4)));
    EXPECT_FALSE(is_unit_mod(q(g, 0), two_adic(g).hnf));
    EXPECT_FALSE(is_unit_mod(q(g, 6), Ideal::principal(q(g, 3))));
}

TEST(Order, StabilizationExamples) {
    const Field g = Field::make(-1);
    // m is the order modulo P^(e+1): 3^4 - 1 = 80 has valuation 1, so m = 20.
    const auto s1 = stabilization(q(g, 3), prime_above(g, 5, 2));
    EXPECT_EQ(ord_mod(q(g, 3), prime_above(g, 5, 2).hnf), 4);
    EXPECT_EQ(s1.m, 20);
    EXPECT_EQ(s1.n0, 2u);
    const auto s2 = stabilization(q(g, 5), two_adic(g));
    EXPECT_EQ(s2.m, 1);
    EXPECT_EQ(s2.n0, 4u);
    EXPECT_THROW(stabilization(q(g, 3), factor_rational_prime(g, 3).primes[0]), ValidationError);
    EXPECT_THROW(stabilization(e(g, "w"), prime_above(g, 5, 2)), ValidationError);
}

TEST(Order, PrimePowerExamples) {
    const Field g = Field::make(-1);
    const auto a = ord_prime_power(q(g, 3), prime_above(g, 5, 2), 2);
    EXPECT_EQ(a.order, 20);
    EXPECT_EQ(a.order, ord_mod(q(g, 3), prime_above(g, 5, 2).hnf.pow(2)));
    const auto b = ord_prime_power(q(g, 5), two_adic(g), 6);
    EXPECT_EQ(b.order, 2);
    EXPECT_TRUE(b.used_closed_form);
    const auto s = stabilization(q(g, 5), two_adic(g));
    EXPECT_EQ(ord_prime_power(s, s.n0).order, s.m);
    EXPECT_THROW(ord_prime_power(s, 0), ValidationError);
}

// Closed form against brute force, the claim v(beta^{m p^k} - 1) = n0 + k e,
// and the divisibility chain of orders.
TEST(Order, StabilizationLawSmallCases) {
    for (long d : {-1, -2, -3, -7}) {
        const Field f = Field::make(d);
        for (const char* bt : {"3", "5", "1+w", "2+w"}) {
            const QuadInt beta = e(f, bt);
            if (norm(beta) <= 1) continue;
            for (long p : {2, 3, 5, 7}) {
                for (const auto& P : factor_rational_prime(f, p).primes) {
                    if (P.hnf.contains(beta)) continue;
                    const Stabilization st = stabilization(beta, P);
                    EXPECT_GE(st.n0, static_cast<unsigned>(P.e) + 1) << d << " " << bt << " " << p;
                    PrimePowers powers(P);
                    for (unsigned k = 0; k <= 2; ++k) {
                        const QuadInt x = pow(beta, Integer(st.m * pow(P.p, k)).get_ui()) - q(f, 1);
                        EXPECT_EQ(valuation(x, powers), st.n0 + k * static_cast<unsigned>(P.e));
                    }
                    Integer prev = 1;
                    for (unsigned n = 1; n <= st.n0 + 3 * static_cast<unsigned>(P.e); ++n) {
                        const Ideal In = powers.power(n);
                        if (In.norm() > 200000) break;
                        const Integer brute = ord_mod(beta, In);
                        EXPECT_EQ(ord_prime_power(st, n).order, brute) << d << " " << bt << " " << to_string(P.hnf) << " n=" << n;
                        EXPECT_EQ(brute % prev, 0);
                        prev = brute;
                        // Minimality witness.
                        EXPECT_EQ(pow_mod(beta, brute, In), In.reduce(q(f, 1)));
                        for (const auto& r : prime_divisors(brute))
                            EXPECT_NE(pow_mod(beta, brute / r, In), In.reduce(q(f, 1)));
                    }
                }
            }
        }
    }
}

TEST(Order, C2ConstantExamples) {
    const Field g = Field::make(-1);
    const std::vector<PrimeIdeal> p5{prime_above(g, 5, 2)};
    EXPECT_EQ(c2_constant(q(g, 3), p5).c2, Rational(1, 25));
    const std::vector<PrimeIdeal> p2{two_adic(g)};
    EXPECT_EQ(c2_constant(q(g, 5), p2).c2, Rational(1, 16));
    EXPECT_THROW(c2_constant(q(g, 3), std::vector<PrimeIdeal>{}), ValidationError);
    EXPECT_THROW(c2_constant(q(g, 3), std::vector<PrimeIdeal>{p5[0], p5[0]}), ValidationError);
}

TEST(Order, LowerBoundExamples) {
    const Field g = Field::make(-1);
    const LowerBoundSpec s3 = c2_constant(q(g, 3), std::vector<PrimeIdeal>{prime_above(g, 5, 2)});
    EXPECT_EQ(order_lower_bound(s3, std::vector<unsigned>{2}), 1);
    EXPECT_EQ(order_lower_bound(s3, std::vector<unsigned>{5}), 125);
    EXPECT_LE(order_lower_bound(s3, std::vector<unsigned>{2}), Rational(ord_mod(q(g, 3), prime_above(g, 5, 2).hnf.pow(2))));
    const LowerBoundSpec s5 = c2_constant(q(g, 5), std::vector<PrimeIdeal>{two_adic(g)});
    EXPECT_EQ(order_lower_bound(s5, std::vector<unsigned>{4}), Rational(1, 4));
    EXPECT_THROW(order_lower_bound(s5, std::vector<unsigned>{0}), ValidationError);
}

// Prop 3.2 on every tuple whose product ideal has norm below 10^6.
TEST(Order, LowerBoundHoldsOnSmallTuples) {
    const Field g = Field::make(-1);
    const QuadInt beta = q(g, 3);
    const std::vector<PrimeIdeal> primes{two_adic(g), prime_above(g, 5, 2), prime_above(g, 5, 3)};
    const LowerBoundSpec lb = c2_constant(beta, primes);
    for (unsigned a = 0; a <= 12; ++a)
        for (unsigned b = 0; b <= 5; ++b)
            for (unsigned c = 0; c <= 5; ++c) {
                const std::vector<unsigned> t{a, b, c};
                if (a + b + c == 0) continue;
                const Ideal I = ideal_product(primes, t);
                if (I.norm() >= 1000000) continue;
                EXPECT_LE(order_lower_bound(lb, t), Rational(ord_mod(beta, I))) << a << b << c;
            }
}

TEST(Order, RationalDenominatorBound) {
    const Field g = Field::make(-1);
    const std::vector<PrimeIdeal> primes{two_adic(g), prime_above(g, 5, 2), prime_above(g, 5, 3)};
    // 2: ceil(3/2) = 2; 5: max(1, 2) = 2.
    EXPECT_EQ(rational_denominator_bound(primes, std::vector<unsigned>{3, 1, 2}), 4 * 25);
    // P*O_K lies in the product ideal.
    for (unsigned a = 0; a < 6; ++a)
        for (unsigned b = 0; b < 4; ++b) {
            const std::vector<unsigned> t{a, b, 0};
            EXPECT_TRUE(ideal_product(primes, t).contains(QuadInt(g, rational_denominator_bound(primes, t), 0)));
        }
}
