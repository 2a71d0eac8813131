#pragma once

#include <stdexcept>
#include <string>

namespace matschroed {

/// Invalid arguments: size mismatches, bad family parameters, insufficient
/// quadrature order.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the domain an operation is defined on (e.g. a matrix that is
/// not nilpotent passed to a nilpotent power series).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Degree or index outside the supported range.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// A numerical kernel failed (eigen-solver did not converge).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity that must hold by construction was violated.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matschroed
