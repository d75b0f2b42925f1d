#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hre {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data breaks a type invariant. Carries the offending matrix cell
/// (0-based) when the problem is tied to one.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
  ValidationError(const std::string& what, std::size_t row, std::size_t col)
      : Error(what), cell_(std::pair{row, col}) {}

  const std::optional<std::pair<std::size_t, std::size_t>>& cell() const {
    return cell_;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> cell_;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class NonReciprocalError : public Error {
 public:
  using Error::Error;
};

/// Koczkodaj's index is only defined for n > 2.
class UndefinedIndexError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_iterate,
                   double residual)
      : Error(what), last_iterate_(std::move(last_iterate)), residual_(residual) {}

  const std::vector<double>& last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

 private:
  std::vector<double> last_iterate_;
  double residual_;
};

/// Malformed input file. Line and column are 1-based; column 0 means the
/// whole line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hre
