#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncis {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed expression input; `position` is a byte offset into the source text.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
  std::size_t position;
};

/// Operation outside the algebra's domain (negative power of a sum, dimension
/// mismatch, violated precondition).
struct DomainError : Error {
  using Error::Error;
};

/// A configured resource guard (term count, power bound, blow-up threshold).
struct GuardError : Error {
  using Error::Error;
};

}  // namespace ncis
