#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dalg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or system file. `position` is a byte offset
/// into the offending line (or npos when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + (position == npos ? std::string()
                                      : " (at position " + std::to_string(position) + ")")),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Bad argument: zero polynomial where a degree is needed, wrong shape, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Macaulay layer would exceed the configured rows x columns budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t degree, std::size_t rows, std::size_t cols, std::size_t budget)
      : Error("matrix budget exceeded at degree " + std::to_string(degree) + ": " +
              std::to_string(rows) + " rows x " + std::to_string(cols) + " columns > " +
              std::to_string(budget)),
        degree_(degree), rows_(rows), cols_(cols) {}

  std::size_t degree() const { return degree_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t degree_, rows_, cols_;
};

/// A mathematical hypothesis of an elimination failed (zero resultant,
/// non-regular input, violated degree bound).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dalg
