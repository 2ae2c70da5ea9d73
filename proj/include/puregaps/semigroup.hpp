#pragma once

// Equal-period machinery for maximal-element sets and pure-gap sets: box
// decomposition along the period lattice, translation by w-vectors, glb/lub,
// and the glb characterization of pure gaps.

#include "puregaps/arith.hpp"
#include "puregaps/tuple.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace puregaps {

Tuple glb(std::span<const Tuple> tuples);
Tuple lub(std::span<const Tuple> tuples);

/// True iff the set is closed under every permutation of coordinates.
bool permutation_closed(const TupleSet& set);

/// w_{k_2..k_n} = (-pi (k_2 + ... + k_n), k_2 pi, ..., k_n pi).
class WVector {
 public:
  WVector(std::vector<Int> k_tail, Int pi);

  Tuple as_tuple() const;
  const std::vector<Int>& k_tail() const noexcept { return k_tail_; }
  Int pi() const noexcept { return pi_; }

 private:
  std::vector<Int> k_tail_;
  Int pi_;
};

enum class FamilyKind { absolute, relative, pure_gap };

/// Level k of a tuple whose tail lies in [0, pi)^{n-1} and whose head lies in
/// [k pi, (k+1) pi) with k >= 0; nullopt otherwise.
std::optional<Int> box0_level(const Tuple& t, Int pi);

/// A set Upsilon(Q) in N_0^n stored through its level-0 boxes
/// Upsilon_{k,0,...,0}; every other box is a translate of one of these.
class MaximalFamily {
 public:
  /// `periods` holds pi_2..pi_n; they must all be equal (throws
  /// std::invalid_argument otherwise).
  MaximalFamily(std::span<const Int> periods, std::size_t n, FamilyKind kind);
  MaximalFamily(Int pi, std::size_t n, FamilyKind kind);

  /// Keeps the members of `elements` that fall in some level-0 box.
  static MaximalFamily from_elements(Int pi, std::size_t n, FamilyKind kind,
                                     const TupleSet& elements);

  /// Throws std::invalid_argument if `t` is outside every level-0 box.
  void insert(const Tuple& t);

  Int pi() const noexcept { return pi_; }
  std::size_t n() const noexcept { return n_; }
  FamilyKind kind() const noexcept { return kind_; }
  /// Empty set for levels with no members.
  const TupleSet& box0(Int k) const;
  const std::map<Int, TupleSet>& levels() const noexcept { return box0_; }
  bool empty() const noexcept { return box0_.empty(); }

 private:
  Int pi_;
  std::size_t n_;
  FamilyKind kind_;
  std::map<Int, TupleSet> box0_;
};

/// Upsilon_{k_1..k_n} = Upsilon_{k_1 + ... + k_n, 0..0} + w_{k_2..k_n}.
TupleSet translate_box(const MaximalFamily& family, std::span<const Int> k);

/// Levels at or beyond ceil((2g - 1) / pi) are necessarily empty.
Int level_bound(Int genus, Int pi);

/// |Upsilon(Q)| = sum_k C(k + n - 1, n - 1) |Upsilon_{k,0..0}|. Throws
/// std::invalid_argument if the family has a member at a level that must be
/// empty for this genus.
BigInt family_cardinality(const MaximalFamily& family, Int genus);

/// The union of translate_box over every k-vector with sum below the level
/// bound, materialized. Test-scale only.
TupleSet expand_family(const MaximalFamily& family, Int genus);

/// (C cap X) + Theta, restricted to N^n (or N_0^n when `allow_zero`), where
/// Theta = { pi v : v in Z^n, sum v = 0 } and C = Z x [0, pi)^{n-1}.
TupleSet expand_by_period_lattice(const TupleSet& c_box_elements, Int pi, std::size_t n,
                                  bool allow_zero);

/// All glb(beta^1..beta^n) over ordered n-tuples from `lambda_star` with
/// beta^l_l < min_{s != l} beta^s_l for every l. Parallel over the first
/// member.
TupleSet pure_gaps_from_relative_maximals(const TupleSet& lambda_star, std::size_t n);
TupleSet pure_gaps_from_relative_maximals_serial(const TupleSet& lambda_star, std::size_t n);

}  // namespace puregaps
