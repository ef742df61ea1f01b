#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ltv {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed expression text. `position` is the byte offset of the offending
/// token; `expected` describes what the parser was looking for.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position, std::string expected)
      : Error(what), position(position), expected(std::move(expected)) {}
  std::size_t position;
  std::string expected;
};

/// An identifier other than the time variable, `pi`, or a known function.
class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(const std::string& what, std::string name, std::size_t position)
      : Error(what), name(std::move(name)), position(position) {}
  std::string name;
  std::size_t position;
};

/// Arithmetic outside the defined domain (division by zero, negative base
/// raised to a non-integer power). `k` is attached when the failing time
/// step is known to the caller.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, std::optional<long> k = std::nullopt)
      : Error(what), k(k) {}
  std::optional<long> k;
};

/// Evaluation produced NaN or infinity.
class NonFiniteResult : public Error {
 public:
  explicit NonFiniteResult(const std::string& what, std::optional<long> k = std::nullopt)
      : Error(what), k(k) {}
  std::optional<long> k;
};

/// The leading coefficient of a difference equation vanishes at step `k`,
/// so the forward recursion has no unique solution there.
class LeadingCoefficientZero : public Error {
 public:
  LeadingCoefficientZero(const std::string& what, long k) : Error(what), k(k) {}
  long k;
};

/// Coefficient `index` evaluates to NaN/inf at step `k`.
class NonFiniteCoefficient : public Error {
 public:
  NonFiniteCoefficient(const std::string& what, std::size_t index, long k)
      : Error(what), index(index), k(k) {}
  std::size_t index;
  long k;
};

/// A call violated a documented precondition (wrong order, bad horizon,
/// zero synthesis constant, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Scenario config file violates the schema. `key` is the offending path.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string key)
      : Error(what), key(std::move(key)) {}
  std::string key;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace ltv
