#include <gtest/gtest.h>

#include "linf/scalar.hpp"
#include "support/random.hpp"

using linf::parse_scalar;
using linf::Scalar;

TEST(Scalar, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_EQ(parse_scalar("-7"), Scalar(-7));
  EXPECT_EQ(parse_scalar("+3"), Scalar(3));
  EXPECT_EQ(parse_scalar("3/4"), Scalar(3, 4));
  EXPECT_EQ(parse_scalar("-3/4"), Scalar(-3, 4));
}

TEST(Scalar, ParsedValuesAreInLowestTerms) {
  const Scalar q = parse_scalar("6/4");
  EXPECT_EQ(linf::to_string(q), "3/2");
  EXPECT_EQ(linf::to_string(parse_scalar("-10/5")), "-2");
  EXPECT_EQ(linf::to_string(parse_scalar("0/9")), "0");
}

TEST(Scalar, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1.5", "1e3", "1/", "/2", "a", "1/2/3", " 1", "1 ", "--1", "1/-2", "1/+2", "0x10"}) {
    EXPECT_THROW(parse_scalar(bad), std::invalid_argument) << bad;
  }
}

TEST(Scalar, RejectsZeroDenominator) { EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument); }

TEST(Scalar, HandlesValuesBeyondMachineWords) {
  const Scalar big = parse_scalar("123456789012345678901234567891/7");
  EXPECT_EQ(linf::to_string(big), "123456789012345678901234567891/7");
  EXPECT_EQ(big * 7, parse_scalar("123456789012345678901234567891"));
}

TEST(ScalarProperty, PrintParseRoundTrip) {
  testing_support::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Scalar q = gen.rational(1000);
    EXPECT_EQ(parse_scalar(linf::to_string(q)), q);
  }
}
