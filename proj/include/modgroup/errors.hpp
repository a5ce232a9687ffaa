#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modgroup {

/// Malformed word or sign-sequence text. `position()` is the zero-based
/// offset of the offending character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The word has no (AB)-form: it is trivial, or conjugate to A, B or B^-1.
class NotABWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested enumeration exceeds the configured ceiling.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(unsigned requested, unsigned limit)
      : std::runtime_error("sequence length " + std::to_string(requested) +
                           " exceeds oracle ceiling " + std::to_string(limit) +
                           " (raise it with --max-oracle-t)"),
        requested_(requested),
        limit_(limit) {}

  unsigned requested() const noexcept { return requested_; }
  unsigned limit() const noexcept { return limit_; }

 private:
  unsigned requested_;
  unsigned limit_;
};

/// An internal arithmetic identity failed (e.g. a division that must be exact).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace modgroup
