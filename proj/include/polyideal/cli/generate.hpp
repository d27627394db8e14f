#pragma once

#include <cstddef>
#include <cstdint>

#include "polyideal/grid.hpp"

namespace polyideal::cli {

// Grows a polyomino from one cell, attaching a boundary cell chosen
// uniformly (over the sorted boundary) at each step. Deterministic in the
// seed; not uniform over n-ominoes. Throws Error(InvalidCount) for n = 0.
Polyomino random_polyomino(std::size_t n, std::uint64_t seed);

}  // namespace polyideal::cli
