#pragma once

#include "puregaps/arith.hpp"
#include "puregaps/tuple.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace puregaps {

/// The Kummer extension y^m = prod_{j=1}^r (x - alpha_j)^lambda, kept
/// abstract: only the counts matter, never the roots or the base field.
///
/// The base field characteristic must not divide m. That is a caveat on the
/// caller; it is not checked because no field is modelled.
class KummerCurve {
 public:
  Int m() const noexcept { return m_; }
  Int r() const noexcept { return r_; }
  Int lambda() const noexcept { return lambda_; }
  Int genus() const noexcept { return genus_; }

  /// Set when the genus is zero; the multi-place results assume g >= 1.
  /// Under m, r >= 2 and gcd(m, r) = 1 this cannot actually happen.
  bool genus_zero_warning() const noexcept { return genus_ == 0; }

  /// floor(r / m), used by almost every range bound.
  Int r_div_m() const noexcept { return r_ / m_; }
  Int m_div_r() const noexcept { return m_ / r_; }

  friend bool operator==(const KummerCurve&, const KummerCurve&) = default;

 private:
  friend KummerCurve new_kummer(Int m, Int r, Int lambda);
  KummerCurve(Int m, Int r, Int lambda, Int genus)
      : m_(m), r_(r), lambda_(lambda), genus_(genus) {}

  Int m_;
  Int r_;
  Int lambda_;
  Int genus_;
};

/// Validates (m, r, lambda) and builds the curve. Throws
/// std::invalid_argument when m < 2, r < 2, lambda < 1 or
/// gcd(m, lambda * r) != 1.
KummerCurve new_kummer(Int m, Int r, Int lambda = 1);

/// A place in the support we model: one of the r totally ramified places
/// P_1..P_r over x = alpha_j, or the unique place at infinity.
class PlaceId {
 public:
  static PlaceId ramified(Int j);
  static constexpr PlaceId infinity() { return PlaceId(0); }

  bool is_infinity() const noexcept { return index_ == 0; }
  /// 1-based branch index; 0 for the infinite place.
  Int index() const noexcept { return index_; }
  std::string label() const;

  friend bool operator==(PlaceId, PlaceId) = default;
  // P_1 < P_2 < ... < P_infinity
  friend std::strong_ordering operator<=>(PlaceId a, PlaceId b) {
    auto key = [](PlaceId p) { return p.index_ == 0 ? INT64_MAX : p.index_; };
    return key(a) <=> key(b);
  }

 private:
  constexpr explicit PlaceId(Int index) : index_(index) {}
  Int index_;
};

/// Parses "P3", "3", "Pinf", "inf".
PlaceId parse_place(const std::string& text);

/// Integer combination of places with finite support. Zero coefficients are
/// never stored.
class Divisor {
 public:
  Divisor() = default;

  Int coefficient(PlaceId p) const;
  Divisor& add(PlaceId p, Int c);
  Int degree() const;
  const std::map<PlaceId, Int>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(Int k, const Divisor& d);
  friend bool operator==(const Divisor&, const Divisor&) = default;

  std::string to_string() const;

 private:
  std::map<PlaceId, Int> coeffs_;
};

Divisor place_divisor(PlaceId p, Int c = 1);

/// W = (2g - 2) P_infinity.
Divisor canonical_divisor(const KummerCurve& curve);

/// The period shared by every pair of distinct ramified places: m.
Int period(const KummerCurve& curve);

/// alpha_1 Q_1 + ... + alpha_n Q_n. Throws std::invalid_argument on a size
/// mismatch or a repeated place.
Divisor divisor_from_tuple(const Tuple& alpha, std::span<const PlaceId> places);

/// (P_1, ..., P_n).
std::vector<PlaceId> first_places(std::size_t n);

/// Checks that the places are pairwise distinct ramified places of `curve`.
void validate_ramified_places(const KummerCurve& curve, std::span<const PlaceId> places);

}  // namespace puregaps
