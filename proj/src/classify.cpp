#include "polyideal/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "polyideal/error.hpp"

namespace polyideal {

namespace {

bool runs_are_contiguous(const Polyomino& p, bool by_row) {
    std::map<int, std::vector<int>> lines;
    for (Point c : p.cells()) lines[by_row ? c.j : c.i].push_back(by_row ? c.i : c.j);
    for (auto& [line, pos] : lines) {
        std::sort(pos.begin(), pos.end());
        if (pos.back() - pos.front() + 1 != static_cast<int>(pos.size())) return false;
    }
    return true;
}

// Peel until a single cell remains; pick decides which leaf goes next.
template <class Pick>
TreeLikeResult peel(const Polyomino& p, Pick pick) {
    std::vector<Point> cells = p.cells();
    while (cells.size() > 1) {
        auto found = leaves_of(cells);
        if (found.empty()) return TreeLikeResult{false, cells};
        Point victim = found[pick(found.size())].cell;
        cells.erase(std::lower_bound(cells.begin(), cells.end(), victim));
    }
    return TreeLikeResult{true, {}};
}

bool subset_connected(std::span<const Point> cells) {
    return connected_components(cells).size() == 1;
}

}  // namespace

bool is_row_convex(const Polyomino& p) { return runs_are_contiguous(p, true); }
bool is_column_convex(const Polyomino& p) { return runs_are_contiguous(p, false); }

SimpleResult is_simple(const Polyomino& p) {
    // Flood the complement from the padding ring around the bounding box.
    const int w = p.width() + 2, h = p.height() + 2;
    auto at = [w](int i, int j) { return static_cast<std::size_t>((j + 1) * w + (i + 1)); };
    std::vector<char> outside(static_cast<std::size_t>(w * h), 0);
    std::vector<Point> stack{Point{-1, -1}};
    outside[at(-1, -1)] = 1;
    while (!stack.empty()) {
        Point c = stack.back();
        stack.pop_back();
        for (Point off : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
            Point q = c + off;
            if (q.i < -1 || q.j < -1 || q.i > p.width() || q.j > p.height()) continue;
            if (outside[at(q.i, q.j)] || p.contains_cell(q)) continue;
            outside[at(q.i, q.j)] = 1;
            stack.push_back(q);
        }
    }
    for (int j = 0; j < p.height(); ++j)
        for (int i = 0; i < p.width(); ++i)
            if (!p.contains_cell({i, j}) && !outside[at(i, j)]) return SimpleResult{false, Point{i, j}};
    return SimpleResult{};
}

TreeLikeResult is_tree_like(const Polyomino& p, TreeMode mode, std::size_t exhaustive_bound) {
    if (mode == TreeMode::Peel) return peel(p, [](std::size_t) { return std::size_t{0}; });

    const std::size_t n = p.size();
    if (n > exhaustive_bound || n >= 63)
        throw Error(ErrorCode::BoundExceeded, "exhaustive tree-like check limited to " +
                                                  std::to_string(exhaustive_bound) + " cells, got " +
                                                  std::to_string(n));
    std::vector<std::uint64_t> masks(std::uint64_t{1} << n);
    std::iota(masks.begin(), masks.end(), std::uint64_t{0});
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<Point> subset;
    for (std::uint64_t mask : masks) {
        if (std::popcount(mask) < 2) continue;
        subset.clear();
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) subset.push_back(p.cells()[k]);
        if (!subset_connected(subset)) continue;
        if (leaves_of(subset).empty()) return TreeLikeResult{false, subset};
    }
    return TreeLikeResult{};
}

TreeLikeResult peel_randomized(const Polyomino& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return peel(p, [&rng](std::size_t count) { return static_cast<std::size_t>(rng() % count); });
}

CellInterval leaf_cell_interval(const Polyomino& p, const Leaf& leaf) {
    // The free edge is opposite the unique neighbor, so the interval runs
    // along the free edge's normal.
    const bool free_edge_horizontal = leaf.free_edge.first.j == leaf.free_edge.second.j;
    return maximal_cell_interval(p, leaf.cell,
                                 free_edge_horizontal ? Direction::Vertical : Direction::Horizontal);
}

namespace {

std::optional<Leaf> find_leaf(const Polyomino& p, Point cell) {
    for (const Leaf& l : leaves(p))
        if (l.cell == cell) return l;
    return std::nullopt;
}

LeafKind classify(const Polyomino& p, const Leaf& leaf) {
    if (p.size() == 1) return LeafKind::Good;
    const CellInterval interval = leaf_cell_interval(p, leaf);
    for (Point v : leaf.free_vertices)
        if (maximal_edge_interval_through(p, v, interval.direction).length() == interval.length())
            return LeafKind::Good;
    return LeafKind::Bad;
}

}  // namespace

LeafKind classify_leaf(const Polyomino& p, Point cell) {
    auto leaf = find_leaf(p, cell);
    if (!leaf) throw Error(ErrorCode::NotALeaf, "cell " + to_string(cell) + " is not a leaf");
    return classify(p, *leaf);
}

LeafCensus leaf_census(const Polyomino& p) {
    LeafCensus census;
    for (Point c : p.cells()) {
        switch (cell_degree(p, c)) {
            case 0: ++census.n0; break;
            case 1: ++census.n1; break;
            case 2: ++census.n2; break;
            case 3: ++census.n3; break;
            default: ++census.n4; break;
        }
    }
    for (const Leaf& leaf : leaves(p)) {
        if (classify(p, leaf) == LeafKind::Good) {
            census.good_leaves.push_back(leaf.cell);
            continue;
        }
        census.bad_leaves.push_back(leaf.cell);
        const CellInterval interval = leaf_cell_interval(p, leaf);
        census.blocking_cells[leaf.cell] = interval.start == leaf.cell ? interval.end : interval.start;
    }
    return census;
}

bool ConnectionGraph::is_tree() const {
    if (vertex_count == 0 || edges.size() + 1 != vertex_count) return false;
    std::vector<std::size_t> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        std::size_t ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

ConnectionGraph connection_graph(const Polyomino& p) {
    ConnectionGraph g;
    g.vertex_count = p.size();
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (Point off : {Point{1, 0}, Point{0, 1}}) {
            if (auto b = p.cell_index(p.cells()[a] + off)) g.edges.emplace_back(std::min(a, *b), std::max(a, *b));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace polyideal
