#include <gtest/gtest.h>

#include <cmath>

#include "qcs/error.hpp"
#include "test_util.hpp"

using namespace qcs;
using namespace qcs::test;

TEST(Field, MakeBasisAndDiscriminant) {
    const Field g = Field::make(-1);
    EXPECT_FALSE(g.half_basis());
    EXPECT_EQ(g.disc(), -4);
    const Field e3 = Field::make(-3);
    EXPECT_TRUE(e3.half_basis());
    EXPECT_EQ(e3.disc(), -3);
    EXPECT_EQ(Field::make(-5).disc(), -20);
    EXPECT_EQ(Field::make(-7).disc(), -7);
    EXPECT_THROW(Field::make(-4), ValidationError);
    EXPECT_THROW(Field::make(0), ValidationError);
    EXPECT_THROW(Field::make(3), ValidationError);
    EXPECT_THROW(Field::make(-12), ValidationError);
}

TEST(Field, UfdList) {
    for (long d : {-1, -2, -3, -7, -11, -19, -43, -67, -163}) EXPECT_TRUE(Field::make(d).is_ufd()) << d;
    for (long d : {-5, -6, -10, -15, -23}) EXPECT_FALSE(Field::make(d).is_ufd()) << d;
}

TEST(QuadInt, ArithmeticExamples) {
    const Field g = Field::make(-1), e3 = Field::make(-3), f5 = Field::make(-5);
    EXPECT_EQ(arith(e(g, "1+w"), e(g, "1-w"), ArithOp::mul), q(g, 2));
    EXPECT_EQ(arith(e(e3, "w"), e(e3, "w"), ArithOp::mul), q(e3, -1, 1));
    EXPECT_EQ(arith(e(f5, "w"), e(f5, "w"), ArithOp::mul), q(f5, -5));
    EXPECT_EQ(arith(q(g, 3, 1), q(g, 1, 2), ArithOp::add), q(g, 4, 3));
    EXPECT_EQ(arith(q(g, 3, 1), q(g, 1, 2), ArithOp::sub), q(g, 2, -1));
    EXPECT_THROW(q(g, 1) + q(e3, 1), ValidationError);
    EXPECT_THROW(q(g, 1) * q(f5, 1), ValidationError);
}

TEST(QuadInt, ConjugateAndNormExamples) {
    const Field g = Field::make(-1), e3 = Field::make(-3), f7 = Field::make(-7), f2 = Field::make(-2);
    EXPECT_EQ(conj(q(g, 3, 2)), q(g, 3, -2));
    EXPECT_EQ(conj(e(e3, "w")), q(e3, 1, -1));
    EXPECT_EQ(conj(q(f7, 2, 3)), q(f7, 5, -3));
    EXPECT_EQ(norm(e(g, "2+w")), 5);
    EXPECT_EQ(norm(e(e3, "w")), 1);
    EXPECT_EQ(norm(e(f2, "1+w")), 3);
}

TEST(QuadInt, ExactDivisionExamples) {
    const Field g = Field::make(-1);
    EXPECT_EQ(exact_div(q(g, 5), e(g, "2+w")), std::optional(q(g, 2, -1)));
    EXPECT_FALSE(exact_div(q(g, 3), e(g, "1+w")));
    EXPECT_EQ(exact_div(q(g, 0), e(g, "7+3*w")), std::optional(q(g, 0)));
    EXPECT_THROW(exact_div(q(g, 1), q(g, 0)), ValidationError);
}

TEST(QuadInt, EmbedExamples) {
    const Field g = Field::make(-1), e3 = Field::make(-3);
    EXPECT_EQ(embed(e(g, "1+w")), std::complex<double>(1, 1));
    EXPECT_NEAR(embed(e(e3, "w")).real(), 0.5, 1e-15);
    EXPECT_NEAR(embed(e(e3, "w")).imag(), std::sqrt(3.0) / 2, 1e-15);
    EXPECT_EQ(embed(q(g, 0)), std::complex<double>(0, 0));
}

TEST(QuadInt, RingProperties) {
    for (long d : {-1, -2, -3, -5, -7, -11, -15, -163}) {
        const Field f = Field::make(d);
        for (int i = 0; i < 200; ++i) {
            const QuadInt a = random_element(f, 1000), b = random_element(f, 1000);
            EXPECT_EQ(norm(a * b), norm(a) * norm(b));
            EXPECT_EQ(conj(a * b), conj(a) * conj(b));
            EXPECT_EQ(conj(a + b), conj(a) + conj(b));
            EXPECT_EQ(conj(conj(a)), a);
            EXPECT_EQ(a * conj(a), QuadInt(f, norm(a), 0));
            if (!a.is_zero()) {
                EXPECT_GE(norm(a), 1);
            } else {
                EXPECT_EQ(norm(a), 0);
            }
            if (!b.is_zero()) EXPECT_EQ(exact_div(a * b, b), std::optional(a));
            const double n = norm(a).get_d();
            if (n > 0) EXPECT_NEAR(std::norm(embed(a)) / n, 1.0, 1e-9);
        }
    }
}

TEST(QuadInt, EmbedAgreesWithNormForLargeCoordinates) {
    const Field f = Field::make(-7);
    for (int i = 0; i < 100; ++i) {
        const QuadInt a(f, Integer(uniform(-(1L << 39), 1L << 39)), Integer(uniform(-(1L << 39), 1L << 39)));
        if (a.is_zero()) continue;
        EXPECT_NEAR(std::norm(embed(a)) / norm(a).get_d(), 1.0, 1e-9);
    }
}

TEST(QuadInt, BigCoordinatesStayExact) {
    const Field g = Field::make(-1);
    const QuadInt a = pow(e(g, "-4+w"), 200);
    const QuadInt b = pow(e(g, "-2+w"), 150);
    EXPECT_EQ(norm(a), pow(Integer(17), 200));
    EXPECT_EQ(exact_div(a * b, b), std::optional(a));
}

TEST(Parse, RoundTrip) {
    const Field f = Field::make(-3);
    for (const char* text : {"0", "7", "-7", "w", "-w", "3*w", "1+w", "2-3*w", "-3*w+1", " 4 + 5 * w ", "5w"}) {
        const QuadInt z = parse_element(text, f);
        EXPECT_EQ(parse_element(to_string(z), f), z) << text;
    }
    EXPECT_EQ(parse_element("-3*w+1", f), q(f, 1, -3));
    EXPECT_EQ(parse_element("w+w", f), q(f, 0, 2));
    for (int i = 0; i < 200; ++i) {
        const QuadInt z = random_element(f, 100000);
        EXPECT_EQ(parse_element(to_string(z), f), z);
    }
}

TEST(Parse, ErrorsNameTheToken) {
    const Field f = Field::make(-1);
    for (const char* bad : {"", "3+", "2*", "x", "1+2*i", "3**w", "+-", "1 2"}) {
        try {
            parse_element(bad, f);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const ParseError& err) {
            EXPECT_NE(std::string(err.what()).find("token"), std::string::npos) << err.what();
        }
    }
    try {
        parse_element("1+2*i", f);
    } catch (const ParseError& err) {
        EXPECT_EQ(err.token(), "i");
    }
}

TEST(FieldElement, NormalizationAndRatio) {
    const Field g = Field::make(-1);
    const FieldElement half(q(g, 2, 4), 4);
    EXPECT_EQ(half.num(), q(g, 1, 2));
    EXPECT_EQ(half.den(), 2);
    const FieldElement neg(q(g, 3), -6);
    EXPECT_EQ(neg.num(), q(g, -1));
    EXPECT_EQ(neg.den(), 2);
    // 1 / (1+i) = (1-i)/2
    const FieldElement r = FieldElement::ratio(q(g, 1), e(g, "1+w"));
    EXPECT_EQ(r.num(), q(g, 1, -1));
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.abs_sq(), Rational(1, 2));
    EXPECT_THROW(FieldElement(q(g, 1), 0), ValidationError);
    EXPECT_EQ(parse_field_element("3/4", g), FieldElement(q(g, 3), 4));
    EXPECT_EQ(parse_field_element("1/(1+w)", g), r);
    EXPECT_EQ(parse_field_element(to_string(r), g), r);
}
