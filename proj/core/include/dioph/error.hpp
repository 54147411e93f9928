#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dioph {

/// Malformed polynomial, number or point text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (zero polynomial, point off the
/// curve, degree out of range, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A zero-dimensional solver was handed an ideal with infinitely many
/// solutions.
class PositiveDimensionalError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The elimination ideal of a family is zero: every fiber is singular.
class IdenticallySingularError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A step budget ran out before the computation finished.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what, std::size_t steps)
      : std::runtime_error(what), steps_(steps) {}
  std::size_t steps() const noexcept { return steps_; }

 private:
  std::size_t steps_;
};

}  // namespace dioph
