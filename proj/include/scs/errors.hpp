#pragma once

#include <stdexcept>
#include <string>

namespace scs {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Size caps exceeded or operands of incompatible dimension.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Argument outside the domain of an operation (x = 0 for T_n(x),
// division by zero, singular diagonal, undefined normalization, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A caller broke a documented precondition, or an internal consistency
// check failed.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace scs
