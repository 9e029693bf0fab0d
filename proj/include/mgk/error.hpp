#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; `position` is the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different variable universes or alphabets.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A word references a generator outside the declared alphabet.
class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

/// The argument of an r-inverse does not lie in the kernel of the deletion map.
class NotInKernel : public Error {
 public:
  using Error::Error;
};

/// A precondition on a structured argument (tree, link, index) does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace mgk
