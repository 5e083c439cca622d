#ifndef ORBITCLASS_ERROR_HPP
#define ORBITCLASS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitclass {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (bad rank, non-prime, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A text input (type string, group spec, matrix literal) failed to parse.
/// `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal consistency check failed (Jacobi identity, folding sign
/// closure, basis reconstruction). Signals a convention bug, not bad input.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitclass

#endif  // ORBITCLASS_ERROR_HPP
