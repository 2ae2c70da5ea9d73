#include "puregaps/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace puregaps {

KummerCurve new_kummer(Int m, Int r, Int lambda) {
  if (m < 2) throw std::invalid_argument("Kummer exponent m must be at least 2");
  if (r < 2) throw std::invalid_argument("number of branch places r must be at least 2");
  if (lambda < 1) throw std::invalid_argument("branch multiplicity lambda must be positive");
  if (std::gcd(m, lambda * r) != 1)
    throw std::invalid_argument("gcd(m, lambda * r) must be 1 (m=" + std::to_string(m) +
                                ", r=" + std::to_string(r) +
                                ", lambda=" + std::to_string(lambda) + ")");
  // (m-1)(r-1) is even: m and r are coprime, so at least one is odd.
  return KummerCurve(m, r, lambda, (m - 1) * (r - 1) / 2);
}

PlaceId PlaceId::ramified(Int j) {
  if (j < 1) throw std::invalid_argument("ramified place index must be >= 1");
  return PlaceId(j);
}

std::string PlaceId::label() const {
  return is_infinity() ? std::string("Pinf") : "P" + std::to_string(index_);
}

PlaceId parse_place(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "pinf" || s == "inf" || s == "infinity" || s == "p_inf")
    return PlaceId::infinity();
  if (!s.empty() && s[0] == 'p') s = s.substr(1);
  if (!s.empty() && s[0] == '_') s = s.substr(1);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("cannot parse place '" + text + "'");
  return PlaceId::ramified(std::stoll(s));
}

Int Divisor::coefficient(PlaceId p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

Divisor& Divisor::add(PlaceId p, Int c) {
  if (c == 0) return *this;
  auto& slot = coeffs_[p];
  slot += c;
  if (slot == 0) coeffs_.erase(p);
  return *this;
}

Int Divisor::degree() const {
  Int deg = 0;
  for (const auto& [p, c] : coeffs_) deg += c;
  return deg;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [p, c] : other.coeffs_) add(p, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [p, c] : other.coeffs_) add(p, -c);
  return *this;
}

Divisor operator*(Int k, const Divisor& d) {
  Divisor out;
  for (const auto& [p, c] : d.coeffs_) out.add(p, k * c);
  return out;
}

std::string Divisor::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Int mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << p.label();
  }
  return os.str();
}

Divisor place_divisor(PlaceId p, Int c) {
  Divisor d;
  d.add(p, c);
  return d;
}

Divisor canonical_divisor(const KummerCurve& curve) {
  return place_divisor(PlaceId::infinity(), 2 * curve.genus() - 2);
}

Int period(const KummerCurve& curve) { return curve.m(); }

Divisor divisor_from_tuple(const Tuple& alpha, std::span<const PlaceId> places) {
  if (alpha.size() != places.size())
    throw std::invalid_argument("tuple and place list differ in length");
  std::vector<PlaceId> sorted(places.begin(), places.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("places must be pairwise distinct");
  Divisor d;
  for (std::size_t i = 0; i < places.size(); ++i) d.add(places[i], alpha[i]);
  return d;
}

std::vector<PlaceId> first_places(std::size_t n) {
  std::vector<PlaceId> places;
  places.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) places.push_back(PlaceId::ramified(static_cast<Int>(j)));
  return places;
}

void validate_ramified_places(const KummerCurve& curve, std::span<const PlaceId> places) {
  for (PlaceId p : places) {
    if (p.is_infinity())
      throw std::invalid_argument("only ramified places P_1..P_r are allowed here");
    if (p.index() > curve.r())
      throw std::invalid_argument("place " + p.label() + " exceeds r = " +
                                  std::to_string(curve.r()));
  }
  std::vector<PlaceId> sorted(places.begin(), places.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("places must be pairwise distinct");
}

}  // namespace puregaps
