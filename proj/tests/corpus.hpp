#pragma once

#include "puregaps/curve.hpp"

#include <numeric>
#include <vector>

namespace puregaps::testing {

// every coprime (m, r) with genus at most 10, lambda = 1
inline std::vector<KummerCurve> small_genus_corpus() {
  std::vector<KummerCurve> out;
  for (Int m = 2; m <= 21; ++m)
    for (Int r = 2; r <= 21; ++r)
      if (std::gcd(m, r) == 1 && (m - 1) * (r - 1) <= 20) out.push_back(new_kummer(m, r));
  return out;
}

inline std::string curve_name(const KummerCurve& c) {
  return "(" + std::to_string(c.m()) + "," + std::to_string(c.r()) + ")";
}

}  // namespace puregaps::testing
