#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace capa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Component or query outside a representable or covered range.
struct RangeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace capa
