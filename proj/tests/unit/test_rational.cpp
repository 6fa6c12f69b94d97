#include "oracles.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace powerstruct;
using powerstruct::testing::Rng;

TEST(Rational, NormalizesSignAndCommonFactors)
{
    const Rational q(6, -4);
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 2);
    EXPECT_EQ(Rational(0, -7), Rational(0));
    EXPECT_EQ(Rational(0, -7).den(), 1);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ArithmeticMatchesCrossMultiplication)
{
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const long a = rng.uniform(-40, 40), b = rng.uniform(1, 40), c = rng.uniform(-40, 40), d = rng.uniform(1, 40);
        const Rational x(a, b), y(c, d);
        EXPECT_EQ(x + y, Rational(a * d + c * b, b * d));
        EXPECT_EQ(x - y, Rational(a * d - c * b, b * d));
        EXPECT_EQ(x * y, Rational(a * c, b * d));
        if (c != 0) {
            EXPECT_EQ(x / y, Rational(a * d, b * c));
        }
        EXPECT_EQ(x < y, a * d < c * b);
        EXPECT_EQ(-(-x), x);
    }
}

TEST(Rational, DivisionByZeroIsRejected) { EXPECT_THROW(Rational(1, 2) / Rational(0), std::domain_error); }

TEST(Rational, OverflowThrowsInsteadOfWrapping)
{
    const Rational big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + Rational(1), std::overflow_error);
    EXPECT_THROW(big * Rational(2), std::overflow_error);
    EXPECT_THROW(Rational(1, std::numeric_limits<std::int64_t>::max()) - Rational(1, std::numeric_limits<std::int64_t>::max() - 1),
                 std::overflow_error);
    // reduction keeps representable results representable
    EXPECT_EQ(big * Rational(1, 2) * Rational(2), big);
}

TEST(Rational, TextRoundTrip)
{
    EXPECT_EQ(Rational(3, 2).to_string(), "3/2");
    EXPECT_EQ(Rational(-1).to_string(), "-1/1");
    EXPECT_EQ(Rational(0).to_string(), "0/1");
    EXPECT_EQ(Rational::parse(" 6/4 "), Rational(3, 2));
    EXPECT_EQ(Rational::parse("-5"), Rational(-5));
    EXPECT_EQ(Rational::parse("2/-4"), Rational(-1, 2));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Rational q(rng.uniform(-1000, 1000), rng.uniform(1, 1000));
        EXPECT_EQ(Rational::parse(q.to_string()), q);
    }
}

TEST(Rational, HashAgreesWithEquality)
{
    EXPECT_EQ(std::hash<Rational>{}(Rational(2, 4)), std::hash<Rational>{}(Rational(1, 2)));
}
