#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace puregaps {

// Failures of a mathematical precondition on otherwise well-formed input.
// Malformed input (bad curve parameters, duplicate places, ...) is reported
// with std::invalid_argument instead.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NOutOfRange : public DomainError {
 public:
  explicit NOutOfRange(const std::string& what) : DomainError("NOutOfRange", what) {}
};

class DegreeWindowError : public DomainError {
 public:
  DegreeWindowError(std::int64_t deg_g, const std::string& what)
      : DomainError("DegreeWindow", what), deg_g_(deg_g) {}

  std::int64_t deg_g() const noexcept { return deg_g_; }

 private:
  std::int64_t deg_g_;
};

class BudgetExceeded : public DomainError {
 public:
  explicit BudgetExceeded(const std::string& what) : DomainError("BudgetExceeded", what) {}
};

class OracleInconsistency : public DomainError {
 public:
  explicit OracleInconsistency(const std::string& what)
      : DomainError("OracleInconsistency", what) {}
};

}  // namespace puregaps
