#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lattice/core.hpp"

namespace lattice {

/// Grid file format:
///
///   lattice-grid v1 W H OX OY
///   H rows of W characters, '#' occupied, '.' vacant
///
/// Row 0 is the top row; the character at (column c, row r) is the square
/// (c - OX, (H - 1 - r) - OY), so the origin sits at column OX, row H-1-OY.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

GridConfig parse_grid(std::string_view text);

/// Inverse of parse_grid. The grid's origin must be (0,0).
std::string emit_grid(const GridConfig& grid);

}  // namespace lattice
