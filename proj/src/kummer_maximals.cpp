#include "puregaps/kummer_maximals.hpp"

#include "puregaps/errors.hpp"

#include <set>
#include <string>

namespace puregaps {

namespace {

void require_maximal_range(const KummerCurve& curve, std::size_t n) {
  const Int limit = max_maximal_places(curve);
  if (n < 2 || static_cast<Int>(n) > limit)
    throw NOutOfRange("n = " + std::to_string(n) + " outside [2, " + std::to_string(limit) +
                      "] for m = " + std::to_string(curve.m()) +
                      ", r = " + std::to_string(curve.r()));
}

Tuple diagonal_point(std::size_t n, Int head, Int tail) {
  Tuple t(n, tail);
  t[0] = head;
  return t;
}

// (k_1 m + i, ..., k_n m + i) over all compositions of `total`.
void add_compositions(TupleSet& out, std::size_t n, Int m, Int i, Int total) {
  for (const auto& comp : compositions(total, n)) {
    Tuple t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = comp[j] * m + i;
    out.insert(std::move(t));
  }
}

}  // namespace

OnePlaceGaps h_one_place(const KummerCurve& curve, bool at_infinity) {
  const Int m = curve.m();
  const Int r = curve.r();
  OnePlaceGaps out;
  out.at_infinity = at_infinity;
  std::set<Int> gaps;
  if (at_infinity) {
    // Gaps of the numerical semigroup <m, r>; all of them are below 2g.
    for (Int v = 1; v < 2 * curve.genus(); ++v) {
      bool representable = false;
      for (Int a = 0; a * m <= v && !representable; ++a) representable = (v - a * m) % r == 0;
      if (!representable) gaps.insert(v);
    }
  } else {
    for (Int i = 0; i <= m - 2 - curve.m_div_r(); ++i)
      for (Int j = 0; j <= r - 2 - (r * (i + 1)) / m; ++j) gaps.insert(1 + i + m * j);
  }
  out.gaps.assign(gaps.begin(), gaps.end());
  return out;
}

Int max_maximal_places(const KummerCurve& curve) { return curve.r() - curve.r_div_m(); }

TupleSet gamma_hat_box(const KummerCurve& curve, std::size_t n) {
  require_maximal_range(curve, n);
  const Int m = curve.m();
  const Int r = curve.r();
  const Int nn = static_cast<Int>(n);
  TupleSet out{Tuple(n, 0)};
  for (Int i = 1; i <= m - 1; ++i) {
    const Int k = r - nn - (r * i) / m;
    out.insert(diagonal_point(n, k * m + i, i));
  }
  return out;
}

TupleSet lambda_hat_box(const KummerCurve& curve, std::size_t n) {
  require_maximal_range(curve, n);
  const Int m = curve.m();
  const Int r = curve.r();
  const Int nn = static_cast<Int>(n);
  TupleSet out{diagonal_point(n, (nn - 2) * m, 0)};
  for (Int i = 1; i <= m - 1; ++i) {
    const Int k = r - nn - (r * i) / m;
    out.insert(diagonal_point(n, (k + nn - 2) * m + i, i));
  }
  return out;
}

TupleSet gamma_star(const KummerCurve& curve, std::size_t n) {
  if (n < 2 || static_cast<Int>(n) > curve.r())
    throw NOutOfRange("n = " + std::to_string(n) + " outside [2, r]");
  TupleSet out;
  if (static_cast<Int>(n) > max_maximal_places(curve)) return out;
  const Int m = curve.m();
  const Int r = curve.r();
  for (Int i = 1; i <= m - 1 - curve.m_div_r(); ++i)
    add_compositions(out, n, m, i, r - static_cast<Int>(n) - (r * i) / m);
  return out;
}

TupleSet lambda_star(const KummerCurve& curve, std::size_t n) {
  require_maximal_range(curve, n);
  const Int m = curve.m();
  const Int r = curve.r();
  TupleSet out;
  for (Int i = 1; i <= m - 1 - curve.m_div_r(); ++i)
    add_compositions(out, n, m, i, r - 2 - (r * i) / m);
  return out;
}

MaximalFamily gamma_star_family(const KummerCurve& curve, std::size_t n) {
  return MaximalFamily::from_elements(curve.m(), n, FamilyKind::absolute, gamma_star(curve, n));
}

MaximalFamily lambda_star_family(const KummerCurve& curve, std::size_t n) {
  return MaximalFamily::from_elements(curve.m(), n, FamilyKind::relative, lambda_star(curve, n));
}

}  // namespace puregaps
