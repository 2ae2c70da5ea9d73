#include "puregaps/tuple.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace puregaps {

namespace {

void require_same_size(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple dimension mismatch");
}

}  // namespace

Tuple& Tuple::operator+=(const Tuple& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Tuple& Tuple::operator-=(const Tuple& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

bool Tuple::le(const Tuple& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Int Tuple::sum() const { return std::accumulate(coords_.begin(), coords_.end(), Int{0}); }

std::string Tuple::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Tuple unit_tuple(std::size_t n, std::size_t i) {
  Tuple t(n, 0);
  t[i] = 1;
  return t;
}

Tuple ones_tuple(std::size_t n) { return Tuple(n, 1); }

}  // namespace puregaps
