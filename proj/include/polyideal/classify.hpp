#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyideal/grid.hpp"

namespace polyideal {

bool is_row_convex(const Polyomino& p);
bool is_column_convex(const Polyomino& p);

struct SimpleResult {
    bool simple = true;
    // Smallest enclosed cell of the bounding box when not simple.
    std::optional<Point> hole;
};

SimpleResult is_simple(const Polyomino& p);

enum class TreeMode { Peel, Exhaustive };

struct TreeLikeResult {
    bool tree_like = true;
    // A subpolyomino without a leaf when not tree-like (parent coordinates).
    std::vector<Point> stuck;
};

inline constexpr std::size_t kDefaultExhaustiveBound = 10;

// Throws Error(BoundExceeded) in exhaustive mode when |P| > bound.
TreeLikeResult is_tree_like(const Polyomino& p, TreeMode mode = TreeMode::Peel,
                            std::size_t exhaustive_bound = kDefaultExhaustiveBound);

// Peeling with leaves removed in a seeded random order.
TreeLikeResult peel_randomized(const Polyomino& p, std::uint64_t seed);

enum class LeafKind { Good, Bad };

// The maximal cell interval a leaf belongs to: the one running towards its
// neighbor. For a single cell the interval is the cell itself, oriented
// along the free edge's normal.
CellInterval leaf_cell_interval(const Polyomino& p, const Leaf& leaf);

// Throws Error(NotALeaf) if cell is not a leaf of p.
LeafKind classify_leaf(const Polyomino& p, Point cell);

struct LeafCensus {
    std::size_t n0 = 0;  // only ever 1, for a single cell
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;
    std::size_t n4 = 0;
    std::vector<Point> good_leaves;
    std::vector<Point> bad_leaves;
    // Bad leaf -> far end cell of its maximal cell interval.
    std::map<Point, Point> blocking_cells;
};

LeafCensus leaf_census(const Polyomino& p);

struct ConnectionGraph {
    std::size_t vertex_count = 0;
    // Cell indices into Polyomino::cells(), first < second, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool is_tree() const;
};

ConnectionGraph connection_graph(const Polyomino& p);

}  // namespace polyideal
