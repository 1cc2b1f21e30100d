#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxmin {

/// Base class for all library errors. `slug()` is the stable machine-readable
/// category the CLI prints as `ERROR: <slug>: <detail>`.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* slug() const noexcept { return "error"; }
};

/// Shape mismatch, non-square input, or asymmetry beyond tolerance.
class DimensionError : public Error {
 public:
  using Error::Error;
  const char* slug() const noexcept override { return "dimension"; }
};

/// Invalid argument values: empty operator lists, non-finite entries,
/// violated preconditions, bad tolerance settings.
class ArgumentError : public Error {
 public:
  using Error::Error;
  const char* slug() const noexcept override { return "argument"; }
};

/// Evaluation outside a function's domain (e.g. ratio with Bx = 0).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* slug() const noexcept override { return "domain"; }
};

/// The maxmin problem has no solution: ker(B) is not contained in ker(A).
class NoSolutionError : public Error {
 public:
  using Error::Error;
  const char* slug() const noexcept override { return "no-solution"; }
};

/// Cholesky pivot at `pivot_index` fell below the positive-definiteness floor.
class DefinitenessError : public Error {
 public:
  DefinitenessError(const std::string& what, std::size_t pivot)
      : Error(what), pivot_index(pivot) {}
  std::size_t pivot_index;
  const char* slug() const noexcept override { return "definiteness"; }
};

/// No supporting-vector candidate survived the range-membership filter,
/// even after projection onto range(B).
class RangeFilterError : public Error {
 public:
  RangeFilterError(const std::string& what, std::size_t total)
      : Error(what), candidates_total(total) {}
  std::size_t candidates_total;
  const char* slug() const noexcept override { return "range-filter"; }
};

/// A data column has (numerically) zero variance and cannot be standardized.
class DegenerateColumnError : public Error {
 public:
  DegenerateColumnError(const std::string& what, std::size_t col)
      : Error(what), column(col) {}
  std::size_t column;
  const char* slug() const noexcept override { return "degenerate-column"; }
};

/// Malformed input file; `line` and `column` are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line_no, std::size_t col_no)
      : Error(what), line(line_no), column(col_no) {}
  std::size_t line;
  std::size_t column;
  const char* slug() const noexcept override { return "parse"; }
};

/// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
  const char* slug() const noexcept override { return "io"; }
};

}  // namespace maxmin
