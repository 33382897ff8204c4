#include <gtest/gtest.h>

#include "szeged/quarter_rational.hpp"

using szeged::QuarterRational;

TEST(QuarterRational, LowestTerms) {
    const auto r = QuarterRational::from_quadrupled(125);
    EXPECT_EQ(r.numerator(), 125);
    EXPECT_EQ(r.denominator(), 4);
    EXPECT_EQ(r.to_fraction_string(), "125/4");
    EXPECT_EQ(r.to_decimal_string(), "31.25");

    EXPECT_EQ(QuarterRational(3636).to_fraction_string(), "3636/1");
    EXPECT_EQ(QuarterRational(3636).to_decimal_string(), "3636");
    EXPECT_EQ(QuarterRational::from_quadrupled(682).to_fraction_string(), "341/2");
    EXPECT_EQ(QuarterRational::from_quadrupled(682).to_decimal_string(), "170.5");
    EXPECT_EQ(QuarterRational().to_fraction_string(), "0/1");
}

TEST(QuarterRational, Negative) {
    const auto r = QuarterRational::from_quadrupled(-3);
    EXPECT_EQ(r.to_fraction_string(), "-3/4");
    EXPECT_EQ(r.to_decimal_string(), "-0.75");
    EXPECT_EQ((-QuarterRational(2)).to_string(), "-2");
}

TEST(QuarterRational, ArithmeticAndOrder) {
    const auto c5 = QuarterRational::from_quadrupled(125);
    EXPECT_EQ(c5 - QuarterRational(20), QuarterRational::from_quadrupled(45));
    EXPECT_EQ(2 * QuarterRational::from_quadrupled(3), QuarterRational::from_quadrupled(6));
    EXPECT_LT(QuarterRational(6), QuarterRational::from_quadrupled(27));
    EXPECT_GT(QuarterRational(7), QuarterRational::from_quadrupled(27));
    EXPECT_TRUE(QuarterRational(16) == QuarterRational::from_quadrupled(64));
    EXPECT_FALSE(c5.is_integer());
    EXPECT_EQ(c5.to_string(), "125/4");
    EXPECT_EQ(QuarterRational(20).to_string(), "20");
}

TEST(QuarterRational, ExactHalf) {
    EXPECT_EQ(szeged::exact_half(192), 96);
    EXPECT_THROW(szeged::exact_half(7), std::logic_error);
}
