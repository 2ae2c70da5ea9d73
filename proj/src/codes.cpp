#include "puregaps/codes.hpp"

#include "puregaps/errors.hpp"
#include "puregaps/pure_gaps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace puregaps {

namespace {

Int ceil_sum(const KummerCurve& curve, std::size_t n, Int k) {
  Int total = 0;
  for (std::size_t j = 1; j <= n; ++j)
    total += ceil_div(curve.m() * (k + static_cast<Int>(j)), curve.r());
  return total;
}

void check_window(Int deg_g, Int genus, Int length) {
  if (deg_g <= 2 * genus - 2)
    throw DegreeWindowError(deg_g, "deg G = " + std::to_string(deg_g) + " is not above 2g - 2 = " +
                                       std::to_string(2 * genus - 2));
  if (deg_g >= length)
    throw DegreeWindowError(deg_g, "deg G = " + std::to_string(deg_g) +
                                       " is not below the length N = " + std::to_string(length));
}

Int checked_power(Int base, Int exponent) {
  Int out = 1;
  for (Int i = 0; i < exponent; ++i) {
    if (out > INT64_MAX / base) throw std::invalid_argument("field size overflows");
    out *= base;
  }
  return out;
}

void validate_spec(const CodeSpec& spec) {
  const KummerCurve& c = spec.curve;
  const Int top_n = c.r() - 1 - c.r_div_m();
  if (spec.n < 2 || static_cast<Int>(spec.n) > top_n)
    throw NOutOfRange("n = " + std::to_string(spec.n) + " outside [2, " + std::to_string(top_n) +
                      "]");
  const Int top_k = max_pure_gap_level(c, spec.n);
  if (spec.k < 0 || spec.k > top_k)
    throw NOutOfRange("k = " + std::to_string(spec.k) + " outside [0, " + std::to_string(top_k) +
                      "]");
  if (spec.partition.size() != spec.n || spec.a.size() != spec.n)
    throw std::invalid_argument("partition and a must both have n entries");
  if (std::any_of(spec.partition.begin(), spec.partition.end(), [](Int v) { return v < 0; }) ||
      std::accumulate(spec.partition.begin(), spec.partition.end(), Int{0}) != spec.k)
    throw std::invalid_argument("partition must be nonnegative and sum to k");
  const BkBox box = b_k(c, spec.n, spec.k);
  for (std::size_t j = 0; j < spec.n; ++j)
    if (spec.a[j] < 1 || spec.a[j] > box.bounds[j])
      throw std::invalid_argument("a is not a point of B_" + std::to_string(spec.k));
  if (spec.length <= 0) throw std::invalid_argument("code length must be positive");
}

}  // namespace

Divisor g_k_divisor(const CodeSpec& spec) {
  const KummerCurve& c = spec.curve;
  Divisor g;
  for (std::size_t j = 1; j <= spec.n; ++j) {
    const Int coeff = 2 * spec.partition[j - 1] * c.m() + spec.a[j - 1] + c.m() - 1 -
                      ceil_div(c.m() * (spec.k + static_cast<Int>(j)), c.r());
    g.add(PlaceId::ramified(static_cast<Int>(j)), coeff);
  }
  return g;
}

CodeParams design_code(const CodeSpec& spec) {
  validate_spec(spec);
  const KummerCurve& c = spec.curve;
  const Int m = c.m();
  const Int r = c.r();
  const Int n = static_cast<Int>(spec.n);
  const Int deg_g = g_k_divisor(spec).degree();
  check_window(deg_g, c.genus(), spec.length);

  const Int sum_a = std::accumulate(spec.a.begin(), spec.a.end(), Int{0});
  const Int sum_ceil = ceil_sum(c, spec.n, spec.k);
  CodeParams p;
  p.length = spec.length;
  p.deg_g = deg_g;
  p.dimension = spec.length + n - 2 * spec.k * m - n * m - 1 + (m - 1) * (r - 1) / 2 - sum_a + sum_ceil;
  const Int d = 2 * spec.k * m + 2 * n * m - m * r + m + r + 1 - 2 * sum_ceil;
  p.flagged = d < 1;
  p.distance_bound = std::max<Int>(d, 1);
  p.rate_sum = boost::rational<Int>(p.dimension + p.distance_bound, p.length);
  return p;
}

GoppaParams goppa_params(Int length, Int deg_g, Int genus) {
  check_window(deg_g, genus, length);
  return GoppaParams{length - deg_g - 1 + genus, deg_g - (2 * genus - 2)};
}

Int carvalho_torres_bound(Int genus, Int deg_g, std::size_t n, const Tuple& alpha,
                          const Tuple& beta) {
  if (alpha.size() != n || beta.size() != n)
    throw std::invalid_argument("alpha and beta must have n entries");
  if (!alpha.le(beta)) throw std::invalid_argument("alpha must be <= beta componentwise");
  return deg_g - (2 * genus - 2) + static_cast<Int>(n) + (beta - alpha).sum();
}

Int rational_points_family1(Int q, Int m) {
  if (q < 2 || m < 1) throw std::invalid_argument("need q >= 2 and m >= 1");
  if ((q + 1) % m != 0) throw std::invalid_argument("m must divide q + 1");
  return q + 1 + m * (q * q - q);
}

Int rational_points_family2(Int q, Int t, Int m) {
  if (q < 2 || m < 1 || t < 2) throw std::invalid_argument("need q >= 2, t >= 2, m >= 1");
  if (t % 2 != 0) throw std::invalid_argument("t must be even");
  const Int qt = checked_power(q, t);
  const Int qh = checked_power(q, t / 2);
  if ((qt - 1) % m != 0) throw std::invalid_argument("m must divide q^t - 1");
  if (std::gcd(m, qh - 1) != 1) throw std::invalid_argument("gcd(m, q^{t/2} - 1) must be 1");
  return (qt - qh) * m + qh + 1;
}

CodeParams shorten(const CodeParams& params, Int s) {
  if (s < 0 || s >= params.dimension)
    throw std::invalid_argument("shortening needs 0 <= s < k");
  CodeParams out = params;
  out.length -= s;
  out.dimension -= s;
  out.rate_sum = boost::rational<Int>(out.dimension + out.distance_bound, out.length);
  return out;
}

CurveFamily parse_curve_family(const std::string& name) {
  if (name == "hermitian-subcover") return CurveFamily::hermitian_subcover;
  if (name == "norm-trace-like") return CurveFamily::norm_trace_like;
  throw std::invalid_argument("unknown curve family '" + name + "'");
}

std::string family_name(CurveFamily family) {
  return family == CurveFamily::hermitian_subcover ? "hermitian-subcover" : "norm-trace-like";
}

KummerCurve family_curve(CurveFamily family, Int q, Int t, Int m) {
  if (family == CurveFamily::hermitian_subcover) return new_kummer(m, q, 1);
  if (t % 2 != 0) throw std::invalid_argument("t must be even");
  const Int qh = checked_power(q, t / 2);
  return new_kummer(m, qh, qh - 1);
}

Int family_points(CurveFamily family, Int q, Int t, Int m) {
  return family == CurveFamily::hermitian_subcover ? rational_points_family1(q, m)
                                                   : rational_points_family2(q, t, m);
}

std::vector<Int> a_vector_with_sum(std::span<const Int> bounds, Int sum) {
  const Int n = static_cast<Int>(bounds.size());
  const Int reach = std::accumulate(bounds.begin(), bounds.end(), Int{0});
  if (sum < n || sum > reach)
    throw std::invalid_argument("a-sum " + std::to_string(sum) + " outside [" + std::to_string(n) +
                                ", " + std::to_string(reach) + "]");
  std::vector<Int> a(bounds.size(), 1);
  Int extra = sum - n;
  for (std::size_t j = 0; j < a.size() && extra > 0; ++j) {
    const Int step = std::min(extra, bounds[j] - 1);
    a[j] += step;
    extra -= step;
  }
  return a;
}

namespace {

TableRow design_row(const TableSpec& spec) {
  const KummerCurve curve = family_curve(spec.family, spec.q, spec.t, spec.m);
  const Int length = family_points(spec.family, spec.q, spec.t, spec.m) - static_cast<Int>(spec.n);
  const BkBox box = b_k(curve, spec.n, spec.k);
  TableRow row;
  row.spec = spec;
  for (Int s : spec.a_sums) {
    CodeSpec cs{curve, spec.n, spec.k, std::vector<Int>(spec.n, 0), a_vector_with_sum(box.bounds, s),
                length};
    cs.partition[0] = spec.k;
    row.params.push_back(design_code(cs));
    row.a_sums.push_back(s);
  }
  return row;
}

}  // namespace

std::vector<TableRow> generate_tables(std::span<const TableSpec> specs) {
  std::vector<TableRow> rows;
  rows.reserve(specs.size());
  for (const TableSpec& spec : specs) rows.push_back(design_row(spec));
  return rows;
}

std::string format_bracket(const TableRow& row) {
  if (row.params.empty()) return "[]";
  const CodeParams& first = row.params.front();
  std::ostringstream os;
  os << '[' << first.length << ", ";
  if (row.params.size() == 1) {
    os << first.dimension;
  } else {
    const Int shifted = first.dimension + row.a_sums.front();
    bool affine = true;
    for (std::size_t i = 0; i < row.params.size(); ++i)
      affine = affine && row.params[i].dimension + row.a_sums[i] == shifted &&
               row.params[i].length == first.length &&
               row.params[i].distance_bound == first.distance_bound;
    if (affine) {
      os << shifted << "-a";
    } else {
      for (std::size_t i = 0; i < row.params.size(); ++i)
        os << (i ? "/" : "") << row.params[i].dimension;
    }
  }
  os << ", ≥" << first.distance_bound << ']';
  return os.str();
}

std::vector<TableSpec> showcase_specs(CurveFamily family) {
  using F = CurveFamily;
  if (family == F::hermitian_subcover)
    return {
        {F::hermitian_subcover, 7, 0, 4, 2, 3, {2}},
        {F::hermitian_subcover, 8, 0, 3, 2, 3, {2}},
        {F::hermitian_subcover, 9, 0, 5, 2, 5, {2}},
        {F::hermitian_subcover, 9, 0, 5, 3, 4, {3, 4}},
    };
  return {
      {F::norm_trace_like, 2, 6, 3, 2, 3, {2}},
      {F::norm_trace_like, 2, 6, 9, 2, 5, {2, 3}},
      {F::norm_trace_like, 2, 6, 9, 3, 4, {3, 4, 5}},
      {F::norm_trace_like, 3, 4, 5, 3, 4, {3, 4}},
  };
}

std::vector<TableRow> sweep_family(CurveFamily family, Int q, Int t, Int m) {
  const KummerCurve curve = family_curve(family, q, t, m);
  const Int points = family_points(family, q, t, m);
  std::vector<TableRow> rows;
  for (Int n = 2; n <= curve.r() - 1 - curve.r_div_m(); ++n) {
    const auto nn = static_cast<std::size_t>(n);
    for (Int k = 0; k <= max_pure_gap_level(curve, nn); ++k) {
      const BkBox box = b_k(curve, nn, k);
      if (box.empty) continue;
      TableRow row;
      row.spec = TableSpec{family, q, t, m, nn, k, {}};
      const Int reach = std::accumulate(box.bounds.begin(), box.bounds.end(), Int{0});
      for (Int s = n; s <= reach; ++s) {
        CodeSpec cs{curve, nn, k, std::vector<Int>(nn, 0), a_vector_with_sum(box.bounds, s),
                    points - n};
        cs.partition[0] = k;
        try {
          row.params.push_back(design_code(cs));
          row.a_sums.push_back(s);
        } catch (const DegreeWindowError&) {
          // outside 2g - 2 < deg G < N; not a usable design
        }
      }
      row.spec.a_sums = row.a_sums;
      if (!row.params.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace puregaps
