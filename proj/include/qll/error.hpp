#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qll {

// Malformed text input. `offset` is the byte position of the failure.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " at offset " + std::to_string(off)), offset(off) {}
};

struct HardnessMismatch : std::logic_error {
  HardnessMismatch() : std::logic_error("hardness mismatch between values") {}
};

// A real value whose p-th power is not an exact rational.
struct NotRepresentable : std::domain_error {
  using std::domain_error::domain_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qll
