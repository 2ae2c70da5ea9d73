#pragma once

// Parameter design for multi-point differential AG codes C_Omega(D, G) on
// Kummer curves, using boxes of pure gaps to lift the Goppa distance bound.

#include "puregaps/curve.hpp"
#include "puregaps/tuple.hpp"

#include <boost/rational.hpp>

#include <span>
#include <string>
#include <vector>

namespace puregaps {

struct CodeSpec {
  KummerCurve curve;
  std::size_t n = 0;           // places P_1..P_n kept out of D
  Int k = 0;                   // box level
  std::vector<Int> partition;  // k_1..k_n, summing to k
  std::vector<Int> a;          // a point of B_k
  Int length = 0;              // N
};

struct CodeParams {
  Int length = 0;
  Int dimension = 0;
  Int distance_bound = 0;  // clamped to >= 1
  Int deg_g = 0;
  boost::rational<Int> rate_sum;  // (k + d) / N
  /// The unclamped distance bound was < 1.
  bool flagged = false;
};

/// G_k = sum_j (2 k_j m + a_j + m - 1 - ceil(m (k + j) / r)) P_j.
Divisor g_k_divisor(const CodeSpec& spec);

/// Throws std::invalid_argument for malformed specs and DegreeWindowError
/// (carrying deg G_k) when 2g - 2 < deg G_k < N fails.
CodeParams design_code(const CodeSpec& spec);

struct GoppaParams {
  Int dimension = 0;
  Int distance_bound = 0;
};

GoppaParams goppa_params(Int length, Int deg_g, Int genus);

/// deg G - (2g - 2) + n + sum (beta_i - alpha_i). The caller vouches that the
/// whole box [alpha, beta] consists of pure gaps.
Int carvalho_torres_bound(Int genus, Int deg_g, std::size_t n, const Tuple& alpha,
                          const Tuple& beta);

/// Rational points of y^m = x^q + x over F_{q^2}: q + 1 + m (q^2 - q).
Int rational_points_family1(Int q, Int m);
/// Rational points of y^m = (x^{q^{t/2}} - x)^{q^{t/2} - 1} over F_{q^t}.
Int rational_points_family2(Int q, Int t, Int m);

/// [N - s, k - s, d]. Throws std::invalid_argument unless 0 <= s < k.
CodeParams shorten(const CodeParams& params, Int s);

enum class CurveFamily { hermitian_subcover, norm_trace_like };

CurveFamily parse_curve_family(const std::string& name);
std::string family_name(CurveFamily family);

/// The Kummer model of a family member: r = q, lambda = 1 for the Hermitian
/// subcover; r = q^{t/2}, lambda = q^{t/2} - 1 for the norm-trace-like curve.
KummerCurve family_curve(CurveFamily family, Int q, Int t, Int m);
Int family_points(CurveFamily family, Int q, Int t, Int m);

struct TableSpec {
  CurveFamily family = CurveFamily::hermitian_subcover;
  Int q = 0;
  Int t = 0;  // ignored for the Hermitian subcover
  Int m = 0;
  std::size_t n = 0;
  Int k = 0;
  std::vector<Int> a_sums;  // values of a_1 + ... + a_n to realize
};

struct TableRow {
  TableSpec spec;
  std::vector<Int> a_sums;
  std::vector<CodeParams> params;  // one per a_sums entry
};

/// Some point of B-bounds with coordinate sum `sum` (greedy from the front).
/// Throws std::invalid_argument when the sum is out of reach.
std::vector<Int> a_vector_with_sum(std::span<const Int> bounds, Int sum);

/// Designs each row with partition (k, 0, ..., 0).
std::vector<TableRow> generate_tables(std::span<const TableSpec> specs);

/// "[N, k, ≥d]"; when several a-values are present and k + a is constant,
/// the dimension is written "K-a".
std::string format_bracket(const TableRow& row);

/// The showcase rows for each family.
std::vector<TableSpec> showcase_specs(CurveFamily family);

/// Every valid (n, k, a-sum) design for one family member, skipping specs
/// outside the degree window.
std::vector<TableRow> sweep_family(CurveFamily family, Int q, Int t, Int m);

}  // namespace puregaps
