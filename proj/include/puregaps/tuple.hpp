#pragma once

#include "puregaps/arith.hpp"

#include <compare>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace puregaps {

/// A point of Z^n. Ordered lexicographically; the componentwise partial
/// order is available through `le`.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::size_t n, Int fill = 0) : coords_(n, fill) {}
  Tuple(std::initializer_list<Int> xs) : coords_(xs) {}
  explicit Tuple(std::vector<Int> xs) : coords_(std::move(xs)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  const std::vector<Int>& coords() const noexcept { return coords_; }

  Tuple& operator+=(const Tuple& other);
  Tuple& operator-=(const Tuple& other);
  friend Tuple operator+(Tuple a, const Tuple& b) { return a += b; }
  friend Tuple operator-(Tuple a, const Tuple& b) { return a -= b; }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

  // componentwise <=
  bool le(const Tuple& other) const;
  Int sum() const;
  std::string to_string() const;

 private:
  std::vector<Int> coords_;
};

using TupleSet = std::set<Tuple>;

Tuple unit_tuple(std::size_t n, std::size_t i);
Tuple ones_tuple(std::size_t n);

}  // namespace puregaps
