#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oscalg {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lexical/syntactic failure in a coefficient expression or rational literal.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A recurrence spec violates a precondition (non-positive b2, wrong
/// parameter domain, prefix-only data where a symbolic tail is required).
class SpecError : public Error {
  using Error::Error;
};

/// Malformed input file or JSON document; the message names the offending field.
class InputError : public Error {
  using Error::Error;
};

}  // namespace oscalg
