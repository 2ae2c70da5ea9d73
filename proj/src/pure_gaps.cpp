#include "puregaps/pure_gaps.hpp"

#include "puregaps/errors.hpp"
#include "puregaps/kummer_maximals.hpp"
#include "puregaps/semigroup.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace puregaps {

namespace {

void require_place_count(const KummerCurve& curve, std::size_t n) {
  if (n < 2 || static_cast<Int>(n) > curve.r())
    throw NOutOfRange("n = " + std::to_string(n) + " outside [2, r = " +
                      std::to_string(curve.r()) + "]");
}

std::vector<Int> box_bounds(const KummerCurve& curve, std::size_t n, Int k) {
  std::vector<Int> bounds(n);
  for (std::size_t j = 1; j <= n; ++j)
    bounds[j - 1] = curve.m() - ceil_div(curve.m() * (k + static_cast<Int>(j)), curve.r());
  return bounds;
}

// Every distinct coordinate permutation of every point of prod [1, a_j].
void for_each_permuted_point(std::span<const Int> a, const std::function<void(const Tuple&)>& fn) {
  const std::size_t n = a.size();
  for (Int v : a)
    if (v < 1) return;
  std::vector<Int> point(n, 1);
  while (true) {
    std::vector<Int> perm = point;
    std::sort(perm.begin(), perm.end());
    do {
      fn(Tuple(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t d = n;
    while (d > 0 && point[d - 1] == a[d - 1]) point[--d] = 1;
    if (d == 0) return;
    ++point[d - 1];
  }
}

}  // namespace

Int max_pure_gap_level(const KummerCurve& curve, std::size_t n) {
  return curve.r() - static_cast<Int>(n) - 1 - curve.r_div_m();
}

BkBox b_k(const KummerCurve& curve, std::size_t n, Int k) {
  require_place_count(curve, n);
  if (k < 0) throw NOutOfRange("box level k must be nonnegative");
  BkBox box;
  box.k = k;
  box.bounds = box_bounds(curve, n, k);
  box.empty = k > max_pure_gap_level(curve, n) ||
              std::any_of(box.bounds.begin(), box.bounds.end(), [](Int a) { return a < 1; });
  return box;
}

TupleSet g_k_zero(const KummerCurve& curve, std::size_t n, Int k) {
  const BkBox box = b_k(curve, n, k);
  TupleSet out;
  if (box.empty) return out;
  Tuple shift(n, 0);
  shift[0] = k * curve.m();
  for_each_permuted_point(box.bounds, [&](const Tuple& t) { out.insert(t + shift); });
  return out;
}

// ---- stream -----------------------------------------------------------------

PureGapStream::PureGapStream(const KummerCurve& curve, std::size_t n)
    : m_(curve.m()), top_level_(max_pure_gap_level(curve, n)), current_(n, 1) {
  require_place_count(curve, n);
  for (Int k = 0; k <= top_level_; ++k) bounds_.push_back(box_bounds(curve, n, k));
  coord_limit_ = (std::max<Int>(top_level_, -1) + 1) * m_;
  done_ = top_level_ < 0;
}

bool PureGapStream::prefix_feasible(std::size_t depth) const {
  const std::size_t n = current_.size();
  std::vector<Int> offsets(n, 1);
  Int level = 0;
  for (std::size_t j = 0; j <= depth; ++j) {
    const Int i = current_[j] % m_;
    if (i == 0) return false;
    offsets[j] = i;
    level += current_[j] / m_;
  }
  if (level > top_level_) return false;
  std::sort(offsets.begin(), offsets.end(), std::greater<>());
  const auto& bounds = bounds_[static_cast<std::size_t>(level)];
  for (std::size_t j = 0; j < n; ++j)
    if (offsets[j] > bounds[j]) return false;
  return true;
}

bool PureGapStream::advance_at(std::size_t depth) {
  Int v = current_[depth] + 1;
  while (v < coord_limit_) {
    if (v % m_ == 0) {
      ++v;
      continue;
    }
    current_[depth] = v;
    if (prefix_feasible(depth)) return true;
    // Larger offsets in this block stay infeasible; a fresh block starting
    // at offset 1 only helps if its level is still reachable.
    if (v % m_ == 1) return false;
    v = (v / m_ + 1) * m_ + 1;
  }
  return false;
}

std::optional<Tuple> PureGapStream::next() {
  if (done_) return std::nullopt;
  const std::size_t n = current_.size();
  if (!started_) {
    started_ = true;
    if (prefix_feasible(n - 1)) return current_;
    done_ = true;
    return std::nullopt;
  }
  for (std::size_t d = n; d-- > 0;) {
    for (std::size_t j = d + 1; j < n; ++j) current_[j] = 1;
    if (advance_at(d)) {
      for (std::size_t j = d + 1; j < n; ++j) current_[j] = 1;
      return current_;
    }
  }
  done_ = true;
  return std::nullopt;
}

PureGapStream pure_gaps(const KummerCurve& curve, std::size_t n) { return PureGapStream(curve, n); }

TupleSet collect(PureGapStream stream) {
  TupleSet out;
  while (auto t = stream.next()) out.insert(out.end(), std::move(*t));
  return out;
}

TupleSet pure_gaps_by_boxes(const KummerCurve& curve, std::size_t n) {
  require_place_count(curve, n);
  TupleSet out;
  for (Int k = 0; k <= max_pure_gap_level(curve, n); ++k) {
    const TupleSet base = g_k_zero(curve, n, k);
    for (const auto& comp : compositions(k, n)) {
      const Tuple w = WVector(std::vector<Int>(comp.begin() + 1, comp.end()), curve.m()).as_tuple();
      for (const Tuple& t : base) {
        [[maybe_unused]] bool fresh = out.insert(t + w).second;
        assert(fresh && "pure-gap boxes overlap");
      }
    }
  }
  return out;
}

// ---- counting -----------------------------------------------------------------

BigInt d_n(std::span<const Int> a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("D_n needs at least one argument");
  if (n == 1) return BigInt(a[0]);
  const BigInt last = a[n - 1];
  BigInt total = power(last, static_cast<unsigned>(n));
  std::vector<Int> reduced(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) reduced[j] = a[j] - a[n - 1];
  for (std::size_t i = 1; i < n; ++i) {
    total += binomial(static_cast<Int>(n), static_cast<Int>(i)) *
             power(last, static_cast<unsigned>(n - i)) *
             d_n(std::span<const Int>(reduced.data(), i));
  }
  return total;
}

BigInt union_card_bruteforce(std::span<const Int> a) {
  if (a.empty()) throw std::invalid_argument("empty bound list");
  if (a.size() > 5 || a[0] > 8)
    throw BudgetExceeded("explicit enumeration is limited to n <= 5 and a_1 <= 8");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 0) throw std::invalid_argument("bounds must be nonnegative");
    if (j > 0 && a[j] > a[j - 1]) throw std::invalid_argument("bounds must be non-increasing");
  }
  std::set<std::vector<Int>> seen;
  std::vector<Int> point(a.size(), 1);
  // Literal union: every point of B under every permutation of positions.
  std::function<void(std::size_t)> walk = [&](std::size_t d) {
    if (d == a.size()) {
      std::vector<std::size_t> sigma(a.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
      do {
        std::vector<Int> image(a.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) image[i] = point[sigma[i]];
        seen.insert(std::move(image));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      return;
    }
    for (Int v = 1; v <= a[d]; ++v) {
      point[d] = v;
      walk(d + 1);
    }
  };
  walk(0);
  return BigInt(seen.size());
}

namespace {

BigInt level_term(const KummerCurve& curve, std::size_t n, Int k) {
  const auto bounds = box_bounds(curve, n, k);
  const Int nn = static_cast<Int>(n);
  return binomial(k + nn - 1, nn - 1) * d_n(bounds);
}

}  // namespace

BigInt pure_gap_count(const KummerCurve& curve, std::size_t n) {
  require_place_count(curve, n);
  const Int top = max_pure_gap_level(curve, n);
  BigInt total = 0;
#pragma omp parallel
  {
    BigInt mine = 0;
#pragma omp for schedule(dynamic, 1) nowait
    for (Int k = 0; k <= top; ++k) mine += level_term(curve, n, k);
#pragma omp critical(puregaps_count_reduce)
    total += mine;
  }
  return total;
}

BigInt pure_gap_count_serial(const KummerCurve& curve, std::size_t n) {
  require_place_count(curve, n);
  BigInt total = 0;
  for (Int k = 0; k <= max_pure_gap_level(curve, n); ++k) total += level_term(curve, n, k);
  return total;
}

BigInt pure_gap_count_n2(const KummerCurve& curve) {
  const Int m = curve.m();
  const Int r = curve.r();
  BigInt total = 0;
  for (Int k = 1; k <= r - 2 - curve.r_div_m(); ++k) {
    const Int c0 = ceil_div(m * k, r);
    const Int c1 = ceil_div(m * (k + 1), r);
    total += BigInt(k) * ((m - c0) * (m - c0) - (c1 - c0) * (c1 - c0));
  }
  return total;
}

BigInt pure_gap_count_multiple_plus_one(const KummerCurve& curve, std::size_t n, Int u) {
  const Int r = curve.r();
  if (u < 1 || curve.m() != u * r + 1)
    throw std::invalid_argument("m = " + std::to_string(curve.m()) + " is not u r + 1 for u = " +
                                std::to_string(u));
  require_place_count(curve, n);
  const Int nn = static_cast<Int>(n);
  BigInt sum = 0;
  for (Int k = 0; k <= r - nn - 1; ++k)
    sum += binomial(k + nn - 1, nn - 1) * (r - k - nn) *
           power(BigInt(r - k), static_cast<unsigned>(n - 1));
  return power(BigInt(u), static_cast<unsigned>(n)) * sum;
}

CubeList plot_data(const KummerCurve& curve, std::size_t n) {
  if (n != 3) throw std::invalid_argument("plot data is only defined for n = 3");
  require_place_count(curve, n);
  CubeList out;
  for (Int k = 0; k <= max_pure_gap_level(curve, n); ++k) {
    const BigInt count = d_n(box_bounds(curve, n, k));
    for (const auto& comp : compositions(k, n)) {
      Tuple origin(n);
      for (std::size_t j = 0; j < n; ++j) origin[j] = comp[j] * curve.m();
      out.cubes.push_back(Cube{origin, curve.m(), count, k});
    }
  }
  std::sort(out.cubes.begin(), out.cubes.end(), [](const Cube& a, const Cube& b) {
    return a.level != b.level ? a.level < b.level : a.origin < b.origin;
  });
  if (static_cast<Int>(n) <= max_maximal_places(curve)) out.lambda_star = lambda_star(curve, n);
  return out;
}

}  // namespace puregaps
