#include "puregaps/codes.hpp"
#include "puregaps/errors.hpp"
#include "puregaps/pure_gaps.hpp"
#include "puregaps/rr_oracle.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace puregaps;

namespace {

std::vector<std::vector<Int>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::vector<std::vector<Int>> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Int> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stoll(cell));
    rows.push_back(row);
  }
  return rows;
}

CodeSpec spec_for(const KummerCurve& c, std::size_t n, Int k, Int a_sum, Int length) {
  const BkBox box = b_k(c, n, k);
  CodeSpec s{c, n, k, std::vector<Int>(n, 0), a_vector_with_sum(box.bounds, a_sum), length};
  s.partition[0] = k;
  return s;
}

}  // namespace

TEST(Design, ExampleRows) {
  const auto p = design_code(spec_for(new_kummer(4, 7), 2, 3, 2, 174));
  EXPECT_EQ(p.length, 174);
  EXPECT_EQ(p.dimension, 156);
  EXPECT_EQ(p.distance_bound, 12);
  EXPECT_EQ(p.deg_g, 26);
  EXPECT_EQ(p.rate_sum, boost::rational<Int>(168, 174));

  const auto q = design_code(spec_for(new_kummer(5, 9), 3, 4, 3, 367));
  EXPECT_EQ(q.dimension, 338);
  EXPECT_EQ(q.distance_bound, 18);

  const auto r = design_code(spec_for(new_kummer(3, 8), 2, 3, 2, 175));
  EXPECT_EQ(r.dimension, 161);
  EXPECT_EQ(r.distance_bound, 10);
}

TEST(Design, GkDivisor) {
  const auto s = spec_for(new_kummer(4, 7), 2, 3, 2, 174);
  const Divisor g = g_k_divisor(s);
  // 2*3*4 + 1 + 3 - ceil(16/7) and 1 + 3 - ceil(20/7)
  EXPECT_EQ(g.coefficient(PlaceId::ramified(1)), 25);
  EXPECT_EQ(g.coefficient(PlaceId::ramified(2)), 1);
}

TEST(Design, Rejections) {
  const auto c = new_kummer(4, 7);
  auto s = spec_for(c, 2, 3, 2, 174);
  s.length = 20;
  try {
    design_code(s);
    FAIL() << "expected a degree window error";
  } catch (const DegreeWindowError& e) {
    EXPECT_EQ(e.deg_g(), 26);
    EXPECT_NE(std::string(e.what()).find("length"), std::string::npos);
  }
  s = spec_for(c, 2, 0, 2, 174);  // deg G = 2*4 + 2 + 6 - 4 - ... below 2g - 2
  EXPECT_THROW(design_code(s), DegreeWindowError);

  s = spec_for(c, 2, 3, 2, 174);
  s.partition = {1, 1};
  EXPECT_THROW(design_code(s), std::invalid_argument);
  s.partition = {4, -1};
  EXPECT_THROW(design_code(s), std::invalid_argument);
  s = spec_for(c, 2, 3, 2, 174);
  s.a = {2, 1};  // B_3 bounds are (1, 1)
  EXPECT_THROW(design_code(s), std::invalid_argument);
  s = spec_for(c, 2, 3, 2, 174);
  s.k = 4;
  EXPECT_THROW(design_code(s), NOutOfRange);
}

TEST(Design, PartitionDoesNotMatter) {
  const auto c = new_kummer(5, 9);
  const auto base = design_code(spec_for(c, 3, 4, 4, 367));
  for (const auto& comp : compositions(4, 3)) {
    auto s = spec_for(c, 3, 4, 4, 367);
    s.partition = comp;
    const auto p = design_code(s);
    EXPECT_EQ(p.dimension, base.dimension);
    EXPECT_EQ(p.distance_bound, base.distance_bound);
    EXPECT_EQ(p.deg_g, base.deg_g);
  }
}

TEST(Design, InvariantsOverSweeps) {
  struct Member {
    CurveFamily f;
    Int q, t, m;
  };
  const std::vector<Member> members{{CurveFamily::hermitian_subcover, 7, 0, 4},
                                    {CurveFamily::hermitian_subcover, 9, 0, 5},
                                    {CurveFamily::hermitian_subcover, 8, 0, 3},
                                    {CurveFamily::norm_trace_like, 2, 6, 9},
                                    {CurveFamily::norm_trace_like, 3, 4, 5}};
  for (const auto& mem : members) {
    const auto rows = sweep_family(mem.f, mem.q, mem.t, mem.m);
    ASSERT_FALSE(rows.empty());
    const KummerCurve c = family_curve(mem.f, mem.q, mem.t, mem.m);
    for (const auto& row : rows) {
      const BkBox box = b_k(c, row.spec.n, row.spec.k);
      for (std::size_t i = 0; i < row.params.size(); ++i) {
        const CodeParams& p = row.params[i];
        EXPECT_LE(p.dimension + p.distance_bound, p.length + 1);
        EXPECT_GE(p.distance_bound, 1);
        const GoppaParams gp = goppa_params(p.length, p.deg_g, c.genus());
        EXPECT_EQ(gp.dimension, p.dimension);
        EXPECT_GE(p.distance_bound, gp.distance_bound);

        // the bound is the pure-gap box bound with the box spelled out
        const auto a = a_vector_with_sum(box.bounds, row.a_sums[i]);
        Tuple alpha(row.spec.n), beta(row.spec.n);
        for (std::size_t j = 0; j < row.spec.n; ++j) {
          const Int head = j == 0 ? row.spec.k * c.m() : 0;
          alpha[j] = head + a[j];
          beta[j] = head + box.bounds[j];
        }
        if (!p.flagged)
          EXPECT_EQ(p.distance_bound,
                    carvalho_torres_bound(c.genus(), p.deg_g, row.spec.n, alpha, beta));
      }
    }
  }
}

TEST(Design, BoxOfPureGaps) {
  // every gamma with alpha <= gamma <= beta is a pure gap
  const auto c = new_kummer(5, 9);
  const auto places = first_places(3);
  for (Int k = 0; k <= max_pure_gap_level(c, 3); ++k) {
    const BkBox box = b_k(c, 3, k);
    for (Int x = 1; x <= box.bounds[0]; ++x)
      for (Int y = 1; y <= box.bounds[1]; ++y)
        for (Int z = 1; z <= box.bounds[2]; ++z)
          ASSERT_TRUE(is_pure_gap(c, Tuple{k * 5 + x, y, z}, places));
  }
}

TEST(Goppa, Arithmetic) {
  EXPECT_EQ(goppa_params(174, 26, 9).dimension, 156);
  EXPECT_EQ(goppa_params(174, 26, 9).distance_bound, 10);
  EXPECT_EQ(goppa_params(175, 23, 7).dimension, 158);
  EXPECT_EQ(goppa_params(175, 23, 7).distance_bound, 11);
  EXPECT_EQ(goppa_params(100, 17, 9).dimension, 91);
  EXPECT_EQ(goppa_params(100, 17, 9).distance_bound, 1);
  EXPECT_THROW(goppa_params(100, 16, 9), DegreeWindowError);
  EXPECT_THROW(goppa_params(20, 20, 9), DegreeWindowError);
}

TEST(CarvalhoTorres, Bound) {
  EXPECT_EQ(carvalho_torres_bound(16, 40, 3, Tuple{1, 1, 1}, Tuple{1, 1, 1}), 40 - 30 + 3);
  EXPECT_EQ(carvalho_torres_bound(16, 40, 3, Tuple{21, 1, 1}, Tuple{22, 1, 1}), 40 - 30 + 3 + 1);
  EXPECT_THROW(carvalho_torres_bound(16, 40, 3, Tuple{2, 1, 1}, Tuple{1, 1, 1}),
               std::invalid_argument);
}

TEST(Points, Families) {
  EXPECT_EQ(rational_points_family1(7, 4), 176);
  EXPECT_EQ(rational_points_family1(9, 5), 370);
  EXPECT_EQ(rational_points_family1(8, 3), 177);
  EXPECT_THROW(rational_points_family1(7, 3), std::invalid_argument);
  EXPECT_EQ(rational_points_family2(2, 6, 3), 177);
  EXPECT_EQ(rational_points_family2(2, 6, 9), 513);
  EXPECT_EQ(rational_points_family2(3, 4, 5), 370);
  EXPECT_THROW(rational_points_family2(2, 5, 3), std::invalid_argument);
  EXPECT_THROW(rational_points_family2(2, 6, 5), std::invalid_argument);
  EXPECT_THROW(rational_points_family2(2, 6, 7), std::invalid_argument);  // gcd(7, 7) != 1
}

TEST(Shorten, Arithmetic) {
  CodeParams p;
  p.length = 367;
  p.dimension = 338;
  p.distance_bound = 18;
  EXPECT_EQ(shorten(p, 0).dimension, 338);
  const auto s = shorten(p, 7);
  EXPECT_EQ(s.length, 360);
  EXPECT_EQ(s.dimension, 331);
  EXPECT_EQ(s.distance_bound, 18);
  p.length = 510;
  p.dimension = 489;
  p.distance_bound = 30;
  EXPECT_EQ(shorten(p, 110).length, 400);
  EXPECT_EQ(shorten(p, 110).dimension, 379);
  EXPECT_THROW(shorten(p, 489), std::invalid_argument);
  EXPECT_THROW(shorten(p, -1), std::invalid_argument);
}

TEST(Tables, MatchFixtures) {
  const auto check = [](CurveFamily f, const std::string& file, bool with_t) {
    const auto rows = generate_tables(showcase_specs(f));
    std::vector<std::vector<Int>> got;
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.params.size(); ++i) {
        std::vector<Int> line{row.spec.q};
        if (with_t) line.push_back(row.spec.t);
        line.insert(line.end(), {row.spec.m, static_cast<Int>(row.spec.n), row.spec.k,
                                 row.a_sums[i], row.params[i].length, row.params[i].dimension,
                                 row.params[i].distance_bound});
        got.push_back(line);
      }
    EXPECT_EQ(got, read_csv(std::string(PUREGAPS_FIXTURES) + "/" + file));
  };
  check(CurveFamily::hermitian_subcover, "table_hermitian_subcover.csv", false);
  check(CurveFamily::norm_trace_like, "table_norm_trace_like.csv", true);
}

TEST(Tables, Brackets) {
  std::ifstream in(std::string(PUREGAPS_FIXTURES) + "/table_brackets.txt");
  std::vector<std::string> expected;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) expected.push_back(line);
  std::vector<std::string> got;
  for (CurveFamily f : {CurveFamily::hermitian_subcover, CurveFamily::norm_trace_like})
    for (const auto& row : generate_tables(showcase_specs(f)))
      got.push_back(family_name(f) + " " + format_bracket(row));
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(generate_tables(std::vector<TableSpec>{}).empty());
}

TEST(Tables, AVector) {
  const std::vector<Int> bounds{3, 2, 1};
  EXPECT_EQ(a_vector_with_sum(bounds, 3), (std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(a_vector_with_sum(bounds, 5), (std::vector<Int>{3, 1, 1}));
  EXPECT_EQ(a_vector_with_sum(bounds, 6), (std::vector<Int>{3, 2, 1}));
  EXPECT_THROW(a_vector_with_sum(bounds, 7), std::invalid_argument);
  EXPECT_THROW(a_vector_with_sum(bounds, 2), std::invalid_argument);
}

TEST(Families, Names) {
  EXPECT_EQ(parse_curve_family("norm-trace-like"), CurveFamily::norm_trace_like);
  EXPECT_EQ(family_name(CurveFamily::hermitian_subcover), "hermitian-subcover");
  EXPECT_THROW(parse_curve_family("klein"), std::invalid_argument);
  const auto c = family_curve(CurveFamily::norm_trace_like, 2, 6, 9);
  EXPECT_EQ(c.r(), 8);
  EXPECT_EQ(c.lambda(), 7);
}
