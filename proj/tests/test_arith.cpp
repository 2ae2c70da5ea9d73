#include "puregaps/arith.hpp"
#include "puregaps/tuple.hpp"

#include <gtest/gtest.h>

using namespace puregaps;

TEST(Arith, FloorCeilSigns) {
  EXPECT_EQ(floor_div(7, 3), 2);
  EXPECT_EQ(floor_div(-7, 3), -3);
  EXPECT_EQ(floor_div(-6, 3), -2);
  EXPECT_EQ(ceil_div(7, 3), 3);
  EXPECT_EQ(ceil_div(-7, 3), -2);
  EXPECT_EQ(ceil_div(6, 3), 2);
  EXPECT_EQ(floor_mod(-1, 5), 4);
}

TEST(Arith, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Arith, CompositionsOrderAndCount) {
  auto c = compositions(2, 2);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (std::vector<Int>{2, 0}));
  EXPECT_EQ(c[2], (std::vector<Int>{0, 2}));
  EXPECT_EQ(compositions(4, 3).size(), 15u);
  EXPECT_TRUE(compositions(-1, 3).empty());
  EXPECT_EQ(compositions(0, 3).size(), 1u);
  EXPECT_THROW(compositions(1, 0), std::invalid_argument);
}

TEST(Tuple, OrderAndArithmetic) {
  Tuple a{1, 2, 3};
  Tuple b{1, 3, 0};
  EXPECT_LT(a, b);
  EXPECT_FALSE(a.le(b));
  EXPECT_TRUE(Tuple({1, 2, 0}).le(a));
  EXPECT_EQ(a + b, Tuple({2, 5, 3}));
  EXPECT_EQ(a - b, Tuple({0, -1, 3}));
  EXPECT_EQ(a.sum(), 6);
  EXPECT_EQ(a.to_string(), "(1,2,3)");
  EXPECT_EQ(unit_tuple(3, 1), Tuple({0, 1, 0}));
  EXPECT_EQ(ones_tuple(2), Tuple({1, 1}));
}
