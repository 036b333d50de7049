#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatknot {

/// Malformed text input. `position` is a byte offset into the parsed string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input parsed but violates a structural invariant (pairing, signs, table shapes).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A valid input on which the requested operation is undefined
/// (no classical underpass, genericity failure, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap or search budget was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flatknot
