#include "puregaps/errors.hpp"
#include "puregaps/kummer_maximals.hpp"
#include "puregaps/rr_oracle.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace puregaps;
using puregaps::testing::curve_name;
using puregaps::testing::small_genus_corpus;

namespace {

std::vector<Int> oracle_one_place_gaps(const KummerCurve& c, PlaceId p) {
  std::vector<Int> out;
  for (Int a = 1; a <= 2 * c.genus(); ++a)
    if (ell(c, place_divisor(p, a)).dim == ell(c, place_divisor(p, a - 1)).dim) out.push_back(a);
  return out;
}

}  // namespace

TEST(OnePlace, RamifiedExample) {
  const auto g = h_one_place(new_kummer(5, 9), false);
  EXPECT_EQ(g.gaps, (std::vector<Int>{1, 2, 3, 4, 6, 7, 8, 11, 12, 13, 16, 17, 21, 22, 26, 31}));
  EXPECT_FALSE(g.at_infinity);
}

TEST(OnePlace, InfinityIsGeneratedByMAndR) {
  const auto g = h_one_place(new_kummer(3, 4), true);
  EXPECT_EQ(g.gaps, (std::vector<Int>{1, 2, 5}));
}

TEST(OnePlace, AgreesWithOracle) {
  for (const auto& c : small_genus_corpus()) {
    EXPECT_EQ(h_one_place(c, false).gaps, oracle_one_place_gaps(c, PlaceId::ramified(1)))
        << curve_name(c);
    EXPECT_EQ(h_one_place(c, true).gaps, oracle_one_place_gaps(c, PlaceId::infinity()))
        << curve_name(c);
  }
}

TEST(Maximals, RangeChecks) {
  const auto c = new_kummer(5, 9);
  EXPECT_EQ(max_maximal_places(c), 8);
  EXPECT_THROW(gamma_hat_box(c, 1), NOutOfRange);
  EXPECT_THROW(gamma_hat_box(c, 9), NOutOfRange);
  EXPECT_THROW(lambda_star(c, 9), NOutOfRange);
  EXPECT_THROW(gamma_star(c, 10), NOutOfRange);
  EXPECT_TRUE(gamma_star(c, 9).empty());
}

TEST(Maximals, ClosedFormExamples) {
  const auto c = new_kummer(5, 9);
  const TupleSet hat = gamma_hat_box(c, 3);
  EXPECT_TRUE(hat.contains(Tuple{0, 0, 0}));
  EXPECT_TRUE(hat.contains(Tuple{26, 1, 1}));
  const TupleSet rel = lambda_hat_box(c, 3);
  EXPECT_TRUE(rel.contains(Tuple{5, 0, 0}));
  EXPECT_TRUE(rel.contains(Tuple{31, 1, 1}));
  EXPECT_EQ(lambda_star(c, 3).size(), 50u);
  EXPECT_EQ(lambda_star(new_kummer(3, 4), 2), (TupleSet{{1, 4}, {4, 1}, {2, 2}}));
}

TEST(Maximals, CBoxMatchesOracleScan) {
  for (const auto& c : small_genus_corpus()) {
    for (std::size_t n = 2; n <= 3; ++n) {
      if (static_cast<Int>(n) > max_maximal_places(c)) continue;
      const auto places = first_places(n);
      EXPECT_EQ(gamma_hat_box(c, n), oracle_maximals_in_c_box(c, places, MaximalKind::absolute))
          << curve_name(c) << " n=" << n;
      EXPECT_EQ(lambda_hat_box(c, n), oracle_maximals_in_c_box(c, places, MaximalKind::relative))
          << curve_name(c) << " n=" << n;
    }
  }
}

TEST(Maximals, StarSetsPassPredicates) {
  for (const auto& c : small_genus_corpus()) {
    for (std::size_t n = 2; n <= 3; ++n) {
      if (static_cast<Int>(n) > max_maximal_places(c)) continue;
      const auto places = first_places(n);
      for (const Tuple& t : gamma_star(c, n))
        ASSERT_TRUE(is_absolute_maximal(c, t, places)) << curve_name(c) << t.to_string();
      for (const Tuple& t : lambda_star(c, n))
        ASSERT_TRUE(is_relative_maximal(c, t, places)) << curve_name(c) << t.to_string();
    }
  }
}

TEST(Maximals, NoPositiveMaximalsBeyondRange) {
  // r - floor(r/m) < n <= r: the oracle finds nothing in the C-box either
  const auto c = new_kummer(3, 4);  // max_maximal_places = 3
  const auto places = first_places(4);
  EXPECT_TRUE(gamma_star(c, 4).empty());
  const TupleSet scan = oracle_maximals_in_c_box(c, places, MaximalKind::absolute);
  for (const Tuple& t : scan)
    EXPECT_FALSE(std::all_of(t.begin(), t.end(), [](Int v) { return v > 0; })) << t.to_string();
}

TEST(Maximals, SmallGenusOne) {
  // (3,2): the single relative maximal (1,1) still produces no pure gap
  const auto c = new_kummer(3, 2);
  EXPECT_EQ(lambda_star(c, 2), (TupleSet{{1, 1}}));
  EXPECT_TRUE(is_relative_maximal(c, Tuple{1, 1}, first_places(2)));
  EXPECT_TRUE(oracle_pure_gaps(c, first_places(2), 2).empty());
}
