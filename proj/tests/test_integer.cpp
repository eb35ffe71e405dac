#include <gtest/gtest.h>

#include <limits>

#include "tracesign/integer.hpp"

using tracesign::Int;
using tracesign::OverflowError;

namespace {

Int max_int() { return Int::from_raw(~(static_cast<Int::raw_type>(1) << 127)); }
Int min_int() { return Int::from_raw(static_cast<Int::raw_type>(1) << 127); }

}  // namespace

TEST(Int, ArithmeticIsExact) {
  const Int big = Int{std::numeric_limits<std::int64_t>::max()};
  EXPECT_EQ(tracesign::to_string(big * big), "85070591730234615847396907784232501249");
  EXPECT_EQ(Int{-7} * Int{6}, Int{-42});
  EXPECT_EQ(-Int{5} + Int{5}, Int{});
}

TEST(Int, OverflowIsReportedNotWrapped) {
  EXPECT_THROW(max_int() + Int{1}, OverflowError);
  EXPECT_THROW(min_int() - Int{1}, OverflowError);
  EXPECT_THROW(max_int() * Int{2}, OverflowError);
  EXPECT_THROW(-min_int(), OverflowError);
  EXPECT_THROW((Int::from_raw(static_cast<Int::raw_type>(1) << 64) * Int::from_raw(static_cast<Int::raw_type>(1) << 64)),
               OverflowError);
  EXPECT_THROW(max_int().to_int64(), OverflowError);
}

TEST(Int, DecimalRoundTripAtExtremes) {
  for (Int v : {Int{}, Int{1}, Int{-1}, Int{1234567890123}, max_int(), min_int()})
    EXPECT_EQ(tracesign::parse_int(tracesign::to_string(v)), v);
  EXPECT_EQ(tracesign::to_string(min_int()), "-170141183460469231731687303715884105728");
  EXPECT_EQ(tracesign::parse_int("+17"), Int{17});
}

TEST(Int, ParseRejectsGarbage) {
  EXPECT_THROW(tracesign::parse_int(""), std::invalid_argument);
  EXPECT_THROW(tracesign::parse_int("-"), std::invalid_argument);
  EXPECT_THROW(tracesign::parse_int("12a"), std::invalid_argument);
  EXPECT_THROW(tracesign::parse_int("170141183460469231731687303715884105728"), OverflowError);
}
