#include "puregaps/arith.hpp"

#include <stdexcept>

namespace puregaps {

BigInt binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each partial product is itself a binomial coefficient, so the division
  // is exact.
  for (Int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

namespace {

void compositions_rec(Int remaining, std::size_t slot, std::vector<Int>& current,
                      std::vector<std::vector<Int>>& out) {
  // Fill from the last slot so that the last coordinate varies slowest.
  if (slot == 0) {
    current[0] = remaining;
    out.push_back(current);
    return;
  }
  for (Int v = 0; v <= remaining; ++v) {
    current[slot] = v;
    compositions_rec(remaining - v, slot - 1, current, out);
  }
}

}  // namespace

std::vector<std::vector<Int>> compositions(Int total, std::size_t parts) {
  if (parts == 0) throw std::invalid_argument("compositions: zero parts");
  std::vector<std::vector<Int>> out;
  if (total < 0) return out;
  std::vector<Int> current(parts, 0);
  compositions_rec(total, parts - 1, current, out);
  return out;
}

}  // namespace puregaps
