#include "puregaps/curve.hpp"
#include "puregaps/errors.hpp"
#include "puregaps/rr_oracle.hpp"

#include <gtest/gtest.h>

using namespace puregaps;

TEST(Curve, GenusFormula) {
  EXPECT_EQ(new_kummer(3, 2).genus(), 1);
  EXPECT_EQ(new_kummer(3, 4).genus(), 3);
  EXPECT_EQ(new_kummer(5, 9).genus(), 16);
  EXPECT_EQ(new_kummer(4, 7).genus(), 9);
  EXPECT_EQ(new_kummer(9, 64, 7).genus(), 252);
  EXPECT_FALSE(new_kummer(2, 3).genus_zero_warning());
}

TEST(Curve, RejectsBadParameters) {
  EXPECT_THROW(new_kummer(1, 3), std::invalid_argument);
  EXPECT_THROW(new_kummer(3, 1), std::invalid_argument);
  EXPECT_THROW(new_kummer(3, 3), std::invalid_argument);
  EXPECT_THROW(new_kummer(4, 6), std::invalid_argument);
  EXPECT_THROW(new_kummer(3, 4, 3), std::invalid_argument);  // gcd(m, lambda r) = 3
  EXPECT_THROW(new_kummer(3, 4, 0), std::invalid_argument);
  EXPECT_NO_THROW(new_kummer(3, 8, 7));
}

TEST(Curve, CanonicalDivisor) {
  const auto c = new_kummer(3, 4);
  const Divisor w = canonical_divisor(c);
  EXPECT_EQ(w.coefficient(PlaceId::infinity()), 4);
  EXPECT_EQ(w.degree(), 2 * c.genus() - 2);
  EXPECT_EQ(ell(c, w).dim, c.genus());
  EXPECT_TRUE(canonical_divisor(new_kummer(3, 2)).is_zero());
}

TEST(Curve, Period) {
  const auto c = new_kummer(4, 7);
  EXPECT_EQ(period(c), 4);
  EXPECT_EQ(verify_period(c, PlaceId::ramified(1), PlaceId::ramified(2)), 4);
  EXPECT_EQ(verify_period(new_kummer(5, 9), PlaceId::ramified(3), PlaceId::ramified(8)), 5);
}

TEST(Curve, PlaceParsing) {
  EXPECT_EQ(parse_place("P3"), PlaceId::ramified(3));
  EXPECT_EQ(parse_place("3"), PlaceId::ramified(3));
  EXPECT_TRUE(parse_place("Pinf").is_infinity());
  EXPECT_TRUE(parse_place("inf").is_infinity());
  EXPECT_THROW(parse_place("P0"), std::invalid_argument);
  EXPECT_THROW(parse_place("Q1"), std::invalid_argument);
  EXPECT_EQ(PlaceId::ramified(12).label(), "P12");
  EXPECT_LT(PlaceId::ramified(40), PlaceId::infinity());
}

TEST(Curve, DivisorArithmetic) {
  Divisor d = place_divisor(PlaceId::ramified(1), 3) + place_divisor(PlaceId::infinity(), 2);
  d -= place_divisor(PlaceId::ramified(1), 3);
  EXPECT_EQ(d.coefficients().size(), 1u);
  EXPECT_EQ(d.degree(), 2);
  EXPECT_EQ((3 * d).degree(), 6);
  EXPECT_EQ(d.to_string(), "2Pinf");
  EXPECT_TRUE((d - d).is_zero());
}

TEST(Curve, DivisorFromTuple) {
  const auto places = first_places(3);
  const Divisor d = divisor_from_tuple(Tuple{26, 1, 1}, places);
  EXPECT_EQ(d.coefficient(PlaceId::ramified(1)), 26);
  EXPECT_EQ(d.degree(), 28);
  EXPECT_THROW(divisor_from_tuple(Tuple{1, 1}, places), std::invalid_argument);
  const std::vector<PlaceId> dup{PlaceId::ramified(2), PlaceId::ramified(2)};
  EXPECT_THROW(divisor_from_tuple(Tuple{1, 1}, dup), std::invalid_argument);
}

TEST(Curve, ValidateRamifiedPlaces) {
  const auto c = new_kummer(3, 4);
  EXPECT_NO_THROW(validate_ramified_places(c, first_places(4)));
  EXPECT_THROW(validate_ramified_places(c, first_places(5)), std::invalid_argument);
  const std::vector<PlaceId> with_inf{PlaceId::ramified(1), PlaceId::infinity()};
  EXPECT_THROW(validate_ramified_places(c, with_inf), std::invalid_argument);
}
