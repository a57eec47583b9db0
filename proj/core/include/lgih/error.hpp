#ifndef LGIH_ERROR_HPP
#define LGIH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgih {

/// Input violates a documented invariant (malformed lattice, complex, shape...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input; carries the zero-based offending position.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lgih

#endif  // LGIH_ERROR_HPP
