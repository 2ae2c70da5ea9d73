#pragma once

// Pure gaps at (P_1, ..., P_n) on a Kummer curve.
//
// At level k the offsets live in the box
//   B_k = { i in N^n : 1 <= i_j <= m - ceil(m (k + j) / r) },
// and the pure gaps in [k_1 m, (k_1+1) m) x ... are (k_1 m, ..., k_n m) plus
// a coordinate permutation of a point of B_{k_1 + ... + k_n}.

#include "puregaps/arith.hpp"
#include "puregaps/curve.hpp"
#include "puregaps/tuple.hpp"

#include <optional>
#include <span>
#include <vector>

namespace puregaps {

/// r - n - 1 - floor(r/m): the top level that can hold pure gaps. Negative
/// when there are none.
Int max_pure_gap_level(const KummerCurve& curve, std::size_t n);

struct BkBox {
  Int k = 0;
  std::vector<Int> bounds;  // a_j = m - ceil(m (k + j) / r), non-increasing
  bool empty = true;
};

/// Throws NOutOfRange unless 2 <= n <= r, or when k < 0.
BkBox b_k(const KummerCurve& curve, std::size_t n, Int k);

/// G_{k,0..0} = (k m, 0, ..., 0) + union_sigma sigma(B_k).
TupleSet g_k_zero(const KummerCurve& curve, std::size_t n, Int k);

/// Lexicographically ordered, lazily generated G_0(P).
///
/// A tuple x belongs to G_0 iff, writing x_j = k_j m + i_j, every i_j is
/// nonzero, k = sum k_j is at most the top level, and the descending
/// rearrangement of i fits under the bounds of B_k. The condition is
/// monotone in every coordinate, so (prefix, 1, ..., 1) is a member exactly
/// when the prefix extends to one. The cursor walks the lexicographic order
/// and uses that test to prune.
class PureGapStream {
 public:
  PureGapStream(const KummerCurve& curve, std::size_t n);

  std::optional<Tuple> next();

 private:
  bool prefix_feasible(std::size_t depth) const;
  bool advance_at(std::size_t depth);

  Int m_;
  Int top_level_;
  std::vector<std::vector<Int>> bounds_;  // bounds_[k] for k = 0..top_level_
  Int coord_limit_;                       // exclusive upper limit of any coordinate
  Tuple current_;
  bool started_ = false;
  bool done_ = false;
};

PureGapStream pure_gaps(const KummerCurve& curve, std::size_t n);

/// Drains a stream into a set.
TupleSet collect(PureGapStream stream);

/// G_0(P) built literally as the union over levels, compositions and
/// permutations. Disjointness of the boxes is asserted in debug builds.
TupleSet pure_gaps_by_boxes(const KummerCurve& curve, std::size_t n);

/// D_1(a) = a; D_n(a) = a_n^n + sum_{i<n} C(n,i) a_n^{n-i} D_i(a_1 - a_n, ..., a_i - a_n).
/// Evaluated exactly for any integer input.
BigInt d_n(std::span<const Int> a);

/// |union_sigma sigma(B)| for B = prod [1, a_j], by explicit enumeration.
/// Requires a non-increasing and nonnegative; throws BudgetExceeded for
/// n > 5 or a_1 > 8.
BigInt union_card_bruteforce(std::span<const Int> a);

/// sum_k C(k + n - 1, n - 1) D_n(bounds of B_k). Parallel over k.
BigInt pure_gap_count(const KummerCurve& curve, std::size_t n);
BigInt pure_gap_count_serial(const KummerCurve& curve, std::size_t n);

/// n = 2 closed form.
BigInt pure_gap_count_n2(const KummerCurve& curve);

/// Closed form for m = u r + 1. Throws std::invalid_argument otherwise.
BigInt pure_gap_count_multiple_plus_one(const KummerCurve& curve, std::size_t n, Int u);

struct Cube {
  Tuple origin;
  Int side = 0;
  BigInt count;
  Int level = 0;  // k_1 + k_2 + k_3
};

struct CubeList {
  std::vector<Cube> cubes;
  TupleSet lambda_star;
};

/// Cube inventory of G_0(P) for three places. Throws std::invalid_argument
/// when n != 3.
CubeList plot_data(const KummerCurve& curve, std::size_t n = 3);

}  // namespace puregaps
