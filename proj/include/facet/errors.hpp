#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facet {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pivot fell below the singularity threshold during elimination.
class SingularError : public Error {
 public:
  explicit SingularError(std::size_t step)
      : Error("singular matrix at elimination step " + std::to_string(step)),
        step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

class CertificateError : public Error {
 public:
  enum class Kind { kSingularBase, kNegativeCoefficient, kEquationMismatch };

  CertificateError(Kind kind, const std::string& what)
      : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Raised when an updated dual coefficient drops below -dual_tol.
class DualViolation : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `path()` names the offending field (JSON pointer
/// style) or is empty for syntax errors, in which case `line()` is set.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string path, std::size_t line = 0)
      : Error(what), path_(std::move(path)), line_(line) {}
  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

class DimensionError : public ParseError {
 public:
  using ParseError::ParseError;
};

class IndexError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace facet
