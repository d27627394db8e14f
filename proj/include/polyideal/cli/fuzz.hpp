#pragma once

// Random search for polyominoes on which "simple" and "balanced" disagree.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/polyideal.hpp"

namespace polyideal::cli {

struct FuzzTrial {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::vector<Point> cells;
    bool simple = false;
    bool balanced = false;
    std::optional<Point> hole;
    BalancedReport::Witness witness = BalancedReport::Witness::RankMismatch;
    std::size_t admissible_rank = 0;
    std::optional<std::string> outside_generator;
    std::optional<std::string> error;  // the trial could not be decided
    double seconds = 0;

    bool disagrees() const { return !error && simple != balanced; }
};

struct FuzzSummary {
    std::size_t trials = 0;
    std::size_t max_cells = 0;
    std::uint64_t seed = 0;
    std::size_t agreements = 0;
    std::size_t errors = 0;
    std::vector<FuzzTrial> results;  // by trial index
    double seconds = 0;

    std::vector<const FuzzTrial*> counterexamples() const;
};

// Trial t draws a size in [1, max_cells] and a growth seed from one seeded
// stream, so results do not depend on how trials are scheduled. Throws
// Error(InvalidCount) when trials or max_cells is zero.
FuzzSummary fuzz_conjecture(std::size_t trials, std::size_t max_cells, std::uint64_t seed,
                            std::size_t threads = 0);

}  // namespace polyideal::cli
