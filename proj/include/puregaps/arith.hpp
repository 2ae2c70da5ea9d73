#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace puregaps {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Floor and ceiling of a / b for b > 0, correct for negative a.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

constexpr Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

constexpr Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

BigInt binomial(Int n, Int k);
BigInt power(const BigInt& base, unsigned exponent);

/// All weak compositions of `total` into `parts` nonnegative summands, in
/// colexicographic order (last coordinate varies slowest).
std::vector<std::vector<Int>> compositions(Int total, std::size_t parts);

}  // namespace puregaps
