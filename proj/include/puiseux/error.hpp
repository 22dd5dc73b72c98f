#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace puiseux {

/// A mathematical precondition was violated (zero divisor, undefined
/// order of the zero element, element outside the monoid, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `offset` is the byte position where the
/// problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A computation would exceed a configured work bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace puiseux
