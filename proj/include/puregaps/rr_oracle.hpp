#pragma once

// Riemann-Roch dimensions on a Kummer curve for divisors supported on the
// ramified places and P_infinity, and the membership / maximality
// predicates built on top of them. Everything else in the library is checked
// against these.
//
// Write f = sum_{s=0}^{m-1} h_s(x) z^s with z^m = prod (x - alpha_j). The
// summands have pairwise distinct valuations at every supported place, so
// f lies in L(D) iff each summand does, and the constraints on h_s are a
// degree bound at infinity plus a zero order at each alpha_j. That gives
//
//   l_s(D) = floor((a_inf - s r) / m) - sum_j ceil((-a_j - s) / m) + 1,
//   l(D)   = sum_s max(0, l_s(D)).

#include "puregaps/curve.hpp"
#include "puregaps/tuple.hpp"

#include <span>
#include <vector>

namespace puregaps {

struct EllResult {
  Int dim = 0;
  /// Unclipped contribution of each residue class s = 0..m-1.
  std::vector<Int> per_residue;
};

/// l(D). Throws std::invalid_argument when D involves a ramified index > r.
EllResult ell(const KummerCurve& curve, const Divisor& divisor);

/// l(alpha_1 Q_1 + ... + alpha_n Q_n + a_inf P_inf) without building a
/// Divisor. Places must already be validated.
Int ell_at(const KummerCurve& curve, std::span<const PlaceId> places, const Tuple& alpha,
           Int a_inf = 0);

/// alpha in the generalized Weierstrass semigroup:
/// l(D_alpha) = l(D_alpha - Q_i) + 1 for every i.
bool in_generalized_semigroup(const KummerCurve& curve, const Tuple& alpha,
                              std::span<const PlaceId> places);

/// alpha in N_0^n, alpha not in H(Q), and l(D_alpha) = l(D_alpha - Q_j) for all j.
bool is_pure_gap(const KummerCurve& curve, const Tuple& alpha, std::span<const PlaceId> places);

/// alpha in H^(Q) and l(D_alpha) = l(D_alpha - Q_1 - ... - Q_n) + 1.
bool is_absolute_maximal(const KummerCurve& curve, const Tuple& alpha,
                         std::span<const PlaceId> places);

/// nabla(alpha) is empty and l(D_alpha) = l(D_{alpha - 1}) + n - 1.
///
/// nabla_i(alpha) equals nabla_i^n(alpha - sum_{j != i} e_j), and
/// nabla_i^n(gamma) is empty iff l(D_gamma) = l(D_gamma - Q_i).
bool is_relative_maximal(const KummerCurve& curve, const Tuple& alpha,
                         std::span<const PlaceId> places);

/// L(A) != L(A - P2) and L(A - P1) = L(A - P1 - P2). Throws
/// std::invalid_argument when p1 == p2.
bool is_discrepancy(const KummerCurve& curve, const Divisor& a, PlaceId p1, PlaceId p2);

/// Smallest k > 0 with l(k P_i - k P_j) = 1, i.e. k(P_i - P_j) principal.
/// Throws OracleInconsistency if nothing is found up to 2g + m.
Int verify_period(const KummerCurve& curve, PlaceId i, PlaceId j);

// ---- box scans ------------------------------------------------------------
//
// The scans below are the data-parallel kernels of the library. Each has a
// `_serial` twin kept as the reference implementation for tests and the
// benchmark.

/// Every alpha in [1, box_max]^n with is_pure_gap(alpha).
TupleSet oracle_pure_gaps(const KummerCurve& curve, std::span<const PlaceId> places, Int box_max);
TupleSet oracle_pure_gaps_serial(const KummerCurve& curve, std::span<const PlaceId> places,
                                 Int box_max);

enum class MaximalKind { absolute, relative };

/// Maximal elements inside C(Q) = Z x [0, m)^{n-1}. The first coordinate
/// is confined to [-(n-1)(m-1), 2g - 2 + n]: below it l(D_alpha) = 0, above it
/// the dimension jumps are too large for either maximality identity.
TupleSet oracle_maximals_in_c_box(const KummerCurve& curve, std::span<const PlaceId> places,
                                  MaximalKind kind);
TupleSet oracle_maximals_in_c_box_serial(const KummerCurve& curve,
                                         std::span<const PlaceId> places, MaximalKind kind);

}  // namespace puregaps
