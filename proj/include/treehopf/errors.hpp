#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treehopf {

/// Malformed textual input. `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A colour outside 1..n, or two operands living over different colour counts.
class ColourError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A request that exceeds a declared enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid input (cycles, disconnected parent maps, bad vertex references).
class InvalidStructure : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace treehopf
