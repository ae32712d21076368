#pragma once

#include <stdexcept>
#include <string>

namespace csurg {

/// Malformed textual input (braid words, rationals, lists). `position` is a
/// character offset into the offending text, or npos when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input is well formed but outside an operation's domain (strand counts,
/// slope ranges, component ids, tuple ranges).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A braid or Legendrian precondition failed (tb bound, parity, stabilization
/// feasibility).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact-arithmetic precondition failed: singular matrix, division by zero
/// during back substitution, non-integral framing where one is required.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Handle reduction ran past its step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A question about an infinite stream that the supplied representation
/// cannot answer.
class UndecidableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace csurg
