#include "puregaps/rr_oracle.hpp"

#include "puregaps/errors.hpp"

#include <omp.h>

#include <stdexcept>
#include <vector>

namespace puregaps {

namespace {

// Unclipped residue-class contribution for coefficients `ramified` (at
// places with nonzero coefficient only) and `a_inf`.
inline Int residue_term(Int m, Int r, Int s, Int a_inf, std::span<const Int> ramified) {
  Int term = floor_div(a_inf - s * r, m) + 1;
  for (Int a : ramified) term -= ceil_div(-a - s, m);
  return term;
}

Int ell_from_coeffs(const KummerCurve& curve, std::span<const Int> ramified, Int a_inf) {
  Int dim = 0;
  for (Int s = 0; s < curve.m(); ++s) {
    Int t = residue_term(curve.m(), curve.r(), s, a_inf, ramified);
    if (t > 0) dim += t;
  }
  return dim;
}

Tuple shifted(const Tuple& alpha, std::size_t i, Int delta) {
  Tuple t = alpha;
  t[i] += delta;
  return t;
}

}  // namespace

EllResult ell(const KummerCurve& curve, const Divisor& divisor) {
  std::vector<Int> ramified;
  Int a_inf = 0;
  for (const auto& [p, c] : divisor.coefficients()) {
    if (p.is_infinity()) {
      a_inf = c;
    } else if (p.index() > curve.r()) {
      throw std::invalid_argument("divisor is supported on " + p.label() +
                                  ", outside P_1..P_r, P_inf");
    } else {
      ramified.push_back(c);
    }
  }
  EllResult result;
  result.per_residue.reserve(static_cast<std::size_t>(curve.m()));
  for (Int s = 0; s < curve.m(); ++s) {
    Int t = residue_term(curve.m(), curve.r(), s, a_inf, ramified);
    result.per_residue.push_back(t);
    if (t > 0) result.dim += t;
  }
  return result;
}

Int ell_at(const KummerCurve& curve, std::span<const PlaceId> places, const Tuple& alpha,
           Int a_inf) {
  (void)places;  // the dimension only depends on which places are distinct
  return ell_from_coeffs(curve, alpha.coords(), a_inf);
}

bool in_generalized_semigroup(const KummerCurve& curve, const Tuple& alpha,
                              std::span<const PlaceId> places) {
  validate_ramified_places(curve, places);
  const Int base = ell_at(curve, places, alpha);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (base != ell_at(curve, places, shifted(alpha, i, -1)) + 1) return false;
  return true;
}

bool is_pure_gap(const KummerCurve& curve, const Tuple& alpha, std::span<const PlaceId> places) {
  validate_ramified_places(curve, places);
  for (Int a : alpha)
    if (a < 0) return false;
  const Int base = ell_at(curve, places, alpha);
  for (std::size_t j = 0; j < alpha.size(); ++j)
    if (base != ell_at(curve, places, shifted(alpha, j, -1))) return false;
  // l(D) = l(D - Q_j) for some j already rules out membership in H(Q).
  return true;
}

bool is_absolute_maximal(const KummerCurve& curve, const Tuple& alpha,
                         std::span<const PlaceId> places) {
  if (!in_generalized_semigroup(curve, alpha, places)) return false;
  return ell_at(curve, places, alpha) ==
         ell_at(curve, places, alpha - ones_tuple(alpha.size())) + 1;
}

bool is_relative_maximal(const KummerCurve& curve, const Tuple& alpha,
                         std::span<const PlaceId> places) {
  validate_ramified_places(curve, places);
  const std::size_t n = alpha.size();
  const Tuple one = ones_tuple(n);
  for (std::size_t i = 0; i < n; ++i) {
    // gamma = alpha - sum_{j != i} e_j
    Tuple gamma = alpha - one;
    gamma[i] += 1;
    if (ell_at(curve, places, gamma) != ell_at(curve, places, shifted(gamma, i, -1)))
      return false;
  }
  return ell_at(curve, places, alpha) ==
         ell_at(curve, places, alpha - one) + static_cast<Int>(n) - 1;
}

bool is_discrepancy(const KummerCurve& curve, const Divisor& a, PlaceId p1, PlaceId p2) {
  if (p1 == p2) throw std::invalid_argument("discrepancy needs two distinct places");
  for (PlaceId p : {p1, p2})
    if (!p.is_infinity() && p.index() > curve.r())
      throw std::invalid_argument("place " + p.label() + " is outside the modelled support");
  const Divisor minus1 = a - place_divisor(p1);
  const Divisor minus2 = a - place_divisor(p2);
  const Divisor minus12 = minus1 - place_divisor(p2);
  return ell(curve, a).dim != ell(curve, minus2).dim &&
         ell(curve, minus1).dim == ell(curve, minus12).dim;
}

Int verify_period(const KummerCurve& curve, PlaceId i, PlaceId j) {
  if (i == j) throw std::invalid_argument("period needs two distinct places");
  const PlaceId pair[] = {i, j};
  validate_ramified_places(curve, pair);
  const Int bound = 2 * curve.genus() + curve.m();
  for (Int k = 1; k <= bound; ++k) {
    Divisor d = place_divisor(i, k) - place_divisor(j, k);
    if (ell(curve, d).dim == 1) return k;
  }
  throw OracleInconsistency("no principal multiple of " + i.label() + " - " + j.label() +
                            " up to " + std::to_string(bound));
}

// ---- box scans --------------------------------------------------------------

namespace {

// Decodes a flat index into a tuple with per-coordinate offsets and extents.
Tuple decode(std::int64_t flat, const std::vector<Int>& lo, const std::vector<Int>& extent) {
  Tuple t(lo.size());
  for (std::size_t d = lo.size(); d-- > 0;) {
    t[d] = lo[d] + flat % extent[d];
    flat /= extent[d];
  }
  return t;
}

std::int64_t volume(const std::vector<Int>& extent) {
  std::int64_t v = 1;
  for (Int e : extent) v *= e;
  return v;
}

template <typename Pred>
TupleSet scan_parallel(const std::vector<Int>& lo, const std::vector<Int>& extent, Pred pred) {
  const std::int64_t total = volume(extent);
  std::vector<TupleSet> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    TupleSet& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t flat = 0; flat < total; ++flat) {
      Tuple t = decode(flat, lo, extent);
      if (pred(t)) mine.insert(std::move(t));
    }
  }
  TupleSet out;
  for (auto& s : partial) out.merge(s);
  return out;
}

template <typename Pred>
TupleSet scan_serial(const std::vector<Int>& lo, const std::vector<Int>& extent, Pred pred) {
  TupleSet out;
  const std::int64_t total = volume(extent);
  for (std::int64_t flat = 0; flat < total; ++flat) {
    Tuple t = decode(flat, lo, extent);
    if (pred(t)) out.insert(std::move(t));
  }
  return out;
}

struct CBox {
  std::vector<Int> lo;
  std::vector<Int> extent;
};

CBox c_box(const KummerCurve& curve, std::size_t n) {
  const Int m = curve.m();
  const Int nn = static_cast<Int>(n);
  CBox box;
  box.lo.assign(n, 0);
  box.extent.assign(n, m);
  box.lo[0] = -(nn - 1) * (m - 1);
  box.extent[0] = 2 * curve.genus() - 2 + nn - box.lo[0] + 1;
  return box;
}

auto maximal_predicate(const KummerCurve& curve, std::span<const PlaceId> places,
                       MaximalKind kind) {
  return [&curve, places, kind](const Tuple& t) {
    return kind == MaximalKind::absolute ? is_absolute_maximal(curve, t, places)
                                         : is_relative_maximal(curve, t, places);
  };
}

}  // namespace

TupleSet oracle_pure_gaps(const KummerCurve& curve, std::span<const PlaceId> places, Int box_max) {
  validate_ramified_places(curve, places);
  if (box_max < 1) return {};
  std::vector<Int> lo(places.size(), 1), extent(places.size(), box_max);
  return scan_parallel(lo, extent,
                       [&](const Tuple& t) { return is_pure_gap(curve, t, places); });
}

TupleSet oracle_pure_gaps_serial(const KummerCurve& curve, std::span<const PlaceId> places,
                                 Int box_max) {
  validate_ramified_places(curve, places);
  if (box_max < 1) return {};
  std::vector<Int> lo(places.size(), 1), extent(places.size(), box_max);
  return scan_serial(lo, extent, [&](const Tuple& t) { return is_pure_gap(curve, t, places); });
}

TupleSet oracle_maximals_in_c_box(const KummerCurve& curve, std::span<const PlaceId> places,
                                  MaximalKind kind) {
  validate_ramified_places(curve, places);
  CBox box = c_box(curve, places.size());
  return scan_parallel(box.lo, box.extent, maximal_predicate(curve, places, kind));
}

TupleSet oracle_maximals_in_c_box_serial(const KummerCurve& curve,
                                         std::span<const PlaceId> places, MaximalKind kind) {
  validate_ramified_places(curve, places);
  CBox box = c_box(curve, places.size());
  return scan_serial(box.lo, box.extent, maximal_predicate(curve, places, kind));
}

}  // namespace puregaps
