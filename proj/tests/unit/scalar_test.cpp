#include <gtest/gtest.h>

#include <hypersob/error.hpp>
#include <hypersob/scalar.hpp>

using namespace hypersob;

TEST(ParseNumber, RationalStaysExact) {
    const auto n = parse_number("-6/4");
    EXPECT_TRUE(n.exact);
    EXPECT_EQ(n.rational, Rational(-3, 2));
    EXPECT_DOUBLE_EQ(n.value, -1.5);
}

TEST(ParseNumber, IntegerIsExact) {
    const auto n = parse_number("+7");
    EXPECT_TRUE(n.exact);
    EXPECT_EQ(n.rational, 7);
}

TEST(ParseNumber, DecimalSelectsFloat) {
    const auto n = parse_number("0.25");
    EXPECT_FALSE(n.exact);
    EXPECT_DOUBLE_EQ(n.value, 0.25);
    EXPECT_FALSE(parse_number("1e-3").exact);
}

TEST(ParseNumber, Rejects) {
    EXPECT_THROW(parse_number("1/0"), InvalidParameter);
    EXPECT_THROW(parse_number("abc"), InvalidParameter);
    EXPECT_THROW(parse_number(""), InvalidParameter);
    EXPECT_THROW(parse_number("1/2/3"), InvalidParameter);
}

TEST(Scalar, RationalIsCanonical) {
    const auto r = from_ratio<Rational>(4, -6);
    EXPECT_EQ(r.get_num(), -2);
    EXPECT_EQ(r.get_den(), 3);
}

TEST(Scalar, NonPositiveInteger) {
    EXPECT_TRUE(is_nonpositive_integer(Rational(0)));
    EXPECT_TRUE(is_nonpositive_integer(Rational(-3)));
    EXPECT_FALSE(is_nonpositive_integer(Rational(-1, 2)));
    EXPECT_FALSE(is_nonpositive_integer(Rational(2)));
    EXPECT_TRUE(is_nonpositive_integer(-2.0));
    EXPECT_FALSE(is_nonpositive_integer(-2.5));
}

TEST(Scalar, CastRoundTripsDyadics) {
    const double x = 0.1;
    const auto r = scalar_cast<Rational>(x);
    EXPECT_EQ(scalar_cast<double>(r), x);
    EXPECT_EQ(to_string(from_ratio<Rational>(5, 10)), "1/2");
}
