#pragma once

// Plain text grids: '#' marks a cell, '.' an empty square, and the first
// line is the top row.

#include <string>
#include <string_view>

#include "polyideal/grid.hpp"

namespace polyideal::cli {

// Short lines are padded with '.'; blank trailing lines and a trailing '\r'
// are ignored. Throws Error(BadCharacter), Error(EmptyInput) or
// Error(NotConnected).
Polyomino parse_grid(std::string_view text);

// Rows joined by '\n', no trailing newline.
std::string render_grid(const Polyomino& p);

}  // namespace polyideal::cli
