#include "puregaps/semigroup.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace puregaps {

namespace {

template <typename Pick>
Tuple fold(std::span<const Tuple> tuples, Pick pick) {
  if (tuples.empty()) throw std::invalid_argument("glb/lub of an empty list");
  Tuple out = tuples.front();
  for (const Tuple& t : tuples.subspan(1)) {
    if (t.size() != out.size()) throw std::invalid_argument("tuple dimension mismatch");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pick(out[i], t[i]);
  }
  return out;
}

}  // namespace

Tuple glb(std::span<const Tuple> tuples) {
  return fold(tuples, [](Int a, Int b) { return std::min(a, b); });
}

Tuple lub(std::span<const Tuple> tuples) {
  return fold(tuples, [](Int a, Int b) { return std::max(a, b); });
}

bool permutation_closed(const TupleSet& set) {
  for (const Tuple& t : set) {
    std::vector<Int> c = t.coords();
    std::sort(c.begin(), c.end());
    do {
      if (!set.contains(Tuple(c))) return false;
    } while (std::next_permutation(c.begin(), c.end()));
  }
  return true;
}

WVector::WVector(std::vector<Int> k_tail, Int pi) : k_tail_(std::move(k_tail)), pi_(pi) {
  if (pi <= 0) throw std::invalid_argument("period must be positive");
  for (Int k : k_tail_)
    if (k < 0) throw std::invalid_argument("w-vector indices must be nonnegative");
}

Tuple WVector::as_tuple() const {
  Tuple w(k_tail_.size() + 1, 0);
  Int total = 0;
  for (std::size_t i = 0; i < k_tail_.size(); ++i) {
    w[i + 1] = k_tail_[i] * pi_;
    total += k_tail_[i];
  }
  w[0] = -pi_ * total;
  return w;
}

std::optional<Int> box0_level(const Tuple& t, Int pi) {
  if (t.size() == 0 || t[0] < 0) return std::nullopt;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= pi) return std::nullopt;
  return t[0] / pi;
}

MaximalFamily::MaximalFamily(std::span<const Int> periods, std::size_t n, FamilyKind kind)
    : pi_(0), n_(n), kind_(kind) {
  if (n < 2) throw std::invalid_argument("families need n >= 2");
  if (periods.size() != n - 1) throw std::invalid_argument("expected n - 1 periods");
  if (std::adjacent_find(periods.begin(), periods.end(), std::not_equal_to<>()) != periods.end())
    throw std::invalid_argument("unequal periods are not supported");
  pi_ = periods.front();
  if (pi_ <= 0) throw std::invalid_argument("period must be positive");
}

MaximalFamily::MaximalFamily(Int pi, std::size_t n, FamilyKind kind)
    : pi_(pi), n_(n), kind_(kind) {
  if (n < 2) throw std::invalid_argument("families need n >= 2");
  if (pi_ <= 0) throw std::invalid_argument("period must be positive");
}

MaximalFamily MaximalFamily::from_elements(Int pi, std::size_t n, FamilyKind kind,
                                           const TupleSet& elements) {
  MaximalFamily family(pi, n, kind);
  for (const Tuple& t : elements)
    if (t.size() == n && box0_level(t, pi)) family.insert(t);
  return family;
}

void MaximalFamily::insert(const Tuple& t) {
  if (t.size() != n_) throw std::invalid_argument("tuple dimension does not match family");
  auto level = box0_level(t, pi_);
  if (!level) throw std::invalid_argument(t.to_string() + " is not in any level-0 box");
  box0_[*level].insert(t);
}

const TupleSet& MaximalFamily::box0(Int k) const {
  static const TupleSet kEmpty;
  auto it = box0_.find(k);
  return it == box0_.end() ? kEmpty : it->second;
}

TupleSet translate_box(const MaximalFamily& family, std::span<const Int> k) {
  if (k.size() != family.n()) throw std::invalid_argument("k-vector has wrong length");
  Int total = 0;
  for (Int v : k) {
    if (v < 0) throw std::invalid_argument("k-vector entries must be nonnegative");
    total += v;
  }
  const Tuple w = WVector(std::vector<Int>(k.begin() + 1, k.end()), family.pi()).as_tuple();
  TupleSet out;
  for (const Tuple& t : family.box0(total)) out.insert(t + w);
  return out;
}

Int level_bound(Int genus, Int pi) { return ceil_div(2 * genus - 1, pi); }

BigInt family_cardinality(const MaximalFamily& family, Int genus) {
  const Int bound = level_bound(genus, family.pi());
  const Int nn = static_cast<Int>(family.n());
  BigInt total = 0;
  for (const auto& [k, members] : family.levels()) {
    if (k >= bound)
      throw std::invalid_argument("family has members at level " + std::to_string(k) +
                                  ", beyond the bound " + std::to_string(bound));
    total += binomial(k + nn - 1, nn - 1) * members.size();
  }
  return total;
}

TupleSet expand_family(const MaximalFamily& family, Int genus) {
  TupleSet out;
  const Int bound = level_bound(genus, family.pi());
  for (Int k = 0; k < bound; ++k) {
    if (family.box0(k).empty()) continue;
    for (const auto& comp : compositions(k, family.n())) {
      TupleSet box = translate_box(family, comp);
      out.insert(box.begin(), box.end());
    }
  }
  return out;
}

TupleSet expand_by_period_lattice(const TupleSet& c_box_elements, Int pi, std::size_t n,
                                  bool allow_zero) {
  const Int floor_value = allow_zero ? 0 : 1;
  TupleSet out;
  for (const Tuple& c : c_box_elements) {
    if (c.size() != n) throw std::invalid_argument("tuple dimension mismatch");
    // Tail coordinates become c_j + pi v_j with v_j >= lowest_j; the head is
    // c_1 - pi (v_2 + ... + v_n).
    std::vector<Int> lowest(n, 0);
    Int min_tail_sum = 0;
    for (std::size_t j = 1; j < n; ++j) {
      lowest[j] = c[j] >= floor_value ? 0 : ceil_div(floor_value - c[j], pi);
      min_tail_sum += lowest[j];
    }
    const Int budget = floor_div(c[0] - floor_value, pi) - min_tail_sum;
    for (Int extra = 0; extra <= budget; ++extra) {
      for (const auto& comp : compositions(extra, n - 1)) {
        Tuple t = c;
        Int shift = 0;
        for (std::size_t j = 1; j < n; ++j) {
          Int v = lowest[j] + comp[j - 1];
          t[j] += pi * v;
          shift += v;
        }
        t[0] -= pi * shift;
        out.insert(std::move(t));
      }
    }
  }
  return out;
}

namespace {

// Extends a partial choice beta^1..beta^depth. Condition for slot l:
// beta^l_l < beta^s_l for all s != l. Checked incrementally against every
// earlier slot in both directions.
void glb_search(const std::vector<Tuple>& pool, std::size_t n, std::vector<const Tuple*>& chosen,
                TupleSet& out) {
  const std::size_t depth = chosen.size();
  if (depth == n) {
    Tuple g(n);
    for (std::size_t l = 0; l < n; ++l) g[l] = (*chosen[l])[l];
    out.insert(std::move(g));
    return;
  }
  for (const Tuple& candidate : pool) {
    bool ok = true;
    for (std::size_t s = 0; s < depth && ok; ++s) {
      const Tuple& prev = *chosen[s];
      ok = prev[s] < candidate[s] && candidate[depth] < prev[depth];
    }
    if (!ok) continue;
    chosen.push_back(&candidate);
    glb_search(pool, n, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

TupleSet pure_gaps_from_relative_maximals(const TupleSet& lambda_star, std::size_t n) {
  const std::vector<Tuple> pool(lambda_star.begin(), lambda_star.end());
  for (const Tuple& t : pool)
    if (t.size() != n) throw std::invalid_argument("tuple dimension mismatch");
  if (pool.empty() || n == 0) return {};
  std::vector<TupleSet> partial(static_cast<std::size_t>(omp_get_max_threads()));
  const std::int64_t count = static_cast<std::int64_t>(pool.size());
#pragma omp parallel
  {
    TupleSet& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<const Tuple*> chosen;
    chosen.reserve(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t first = 0; first < count; ++first) {
      chosen.assign(1, &pool[static_cast<std::size_t>(first)]);
      glb_search(pool, n, chosen, mine);
    }
  }
  TupleSet out;
  for (auto& s : partial) out.merge(s);
  return out;
}

TupleSet pure_gaps_from_relative_maximals_serial(const TupleSet& lambda_star, std::size_t n) {
  const std::vector<Tuple> pool(lambda_star.begin(), lambda_star.end());
  for (const Tuple& t : pool)
    if (t.size() != n) throw std::invalid_argument("tuple dimension mismatch");
  TupleSet out;
  if (n == 0) return out;
  std::vector<const Tuple*> chosen;
  glb_search(pool, n, chosen, out);
  return out;
}

}  // namespace puregaps
