#pragma once

#include <stdexcept>
#include <string>

namespace qpknot {

/// Input outside an operation's domain (bad strand count, index out of range, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by knot-only operations when a braid closes to a link.
class KnotRequired : public DomainError {
public:
  using DomainError::DomainError;
};

/// Two computations that must agree did not (oracle mismatch, inexact division).
/// Always a bug or an arithmetic limit, never bad user input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The rule engine derived two incompatible facts, which signals bad assertions.
class Contradiction : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text that does not match a grammar. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace qpknot
