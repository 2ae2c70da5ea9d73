#pragma once

#include "puregaps/curve.hpp"
#include "puregaps/semigroup.hpp"
#include "puregaps/tuple.hpp"

#include <vector>

namespace puregaps {

struct OnePlaceGaps {
  std::vector<Int> gaps;  // sorted
  bool at_infinity = false;
};

/// Gaps of H(P) at a single ramified place, or at P_infinity where
/// H(P_inf) = <m, r>.
OnePlaceGaps h_one_place(const KummerCurve& curve, bool at_infinity);

/// Largest n for which maximal elements at (P_1..P_n) exist: r - floor(r/m).
Int max_maximal_places(const KummerCurve& curve);

/// Absolute maximals in C(P): the zero tuple and (k m + i, i, ..., i) for
/// 1 <= i <= m - 1 with k = r - n - floor(r i / m). k may be negative.
/// Throws NOutOfRange unless 2 <= n <= r - floor(r/m).
TupleSet gamma_hat_box(const KummerCurve& curve, std::size_t n);

/// Relative maximals in C(P): ((n-2) m, 0, ..., 0) and
/// ((k + n - 2) m + i, i, ..., i) for 1 <= i <= m - 1.
TupleSet lambda_hat_box(const KummerCurve& curve, std::size_t n);

/// Absolute maximals with every coordinate positive. Empty for
/// r - floor(r/m) < n <= r; NOutOfRange outside [2, r].
TupleSet gamma_star(const KummerCurve& curve, std::size_t n);

/// Relative maximals with every coordinate positive.
TupleSet lambda_star(const KummerCurve& curve, std::size_t n);

/// gamma_star / lambda_star stored through their level-0 boxes.
MaximalFamily gamma_star_family(const KummerCurve& curve, std::size_t n);
MaximalFamily lambda_star_family(const KummerCurve& curve, std::size_t n);

}  // namespace puregaps
