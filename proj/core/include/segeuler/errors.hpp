#pragma once

#include <stdexcept>
#include <string>

namespace segeuler {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the supported range (e.g. n = 0 or n above a limit).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different ambient spaces.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined on this input (gcd(0, 0), Sturm chain of 0, ...).
class UndefinedInputError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a documented size or time budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed user-facing input (coefficient lists, bar notation, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Caller misuse such as an empty sequence where one is required.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class DomainCode {
  kNotRealRooted,
  kDegreeGap,
  kNonPositiveLeading,
  kNotMultiaffine,
  kUnresolved,
};

const char* to_string(DomainCode code) noexcept;

/// Input outside the mathematical domain of an operation; carries a code.
class DomainError : public Error {
 public:
  DomainError(DomainCode code, const std::string& what)
      : Error(what), code_(code) {}
  DomainCode code() const noexcept { return code_; }

 private:
  DomainCode code_;
};

}  // namespace segeuler
