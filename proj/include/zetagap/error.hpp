#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetagap {

// Numeric values are mirrored by zg_status in zetagap.h.
enum class ErrorCode : int {
  kDomain = 1,
  kToleranceNotMet = 2,
  kNoCertificate = 3,
  kParse = 4,
  kMonotonicity = 5,
  kEmptyTable = 6,
  kRange = 7,
  kResource = 8,
  kInvalidScheme = 9,
  kIo = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}
};

/// Adaptive quadrature ran out of subdivisions. The best estimate and its
/// error bound are kept so callers can decide whether to accept them.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(double estimate, double error_bound)
      : Error(ErrorCode::kToleranceNotMet,
              "quadrature tolerance not met (estimate " + std::to_string(estimate) +
                  ", error bound " + std::to_string(error_bound) + ")"),
        estimate_(estimate),
        error_bound_(error_bound) {}
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

class NoCertificate : public Error {
 public:
  explicit NoCertificate(const std::string& what) : Error(ErrorCode::kNoCertificate, what) {}
};

/// Errors tied to a line of a text input. Line numbers are 1-based.
class InputError : public Error {
 public:
  InputError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCode::kRange, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorCode::kResource, what) {}
};

class InvalidScheme : public Error {
 public:
  explicit InvalidScheme(const std::string& what) : Error(ErrorCode::kInvalidScheme, what) {}
};

}  // namespace zetagap
