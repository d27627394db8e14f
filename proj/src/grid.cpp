#include "polyideal/grid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polyideal/error.hpp"

namespace polyideal {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::CellNotInPolyomino: return "CellNotInPolyomino";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::NotALeaf: return "NotALeaf";
        case ErrorCode::ZeroLabeling: return "ZeroLabeling";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::NotTreeLike: return "NotTreeLike";
        case ErrorCode::NotBalanced: return "NotBalanced";
        case ErrorCode::BadCharacter: return "BadCharacter";
        case ErrorCode::InvalidCount: return "InvalidCount";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::TooManyVariables: return "TooManyVariables";
        case ErrorCode::ExponentOverflow: return "ExponentOverflow";
        case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    }
    return "Unknown";
}

std::string to_string(Point p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::array<Point, 4> Cell::vertices() const {
    return {corner, corner + Point{1, 0}, corner + Point{0, 1}, corner + Point{1, 1}};
}

std::array<Edge, 4> Cell::edges() const {
    const Point a = corner;
    return {Edge{a, a + Point{1, 0}}, Edge{a, a + Point{0, 1}},
            Edge{a + Point{1, 0}, a + Point{1, 1}}, Edge{a + Point{0, 1}, a + Point{1, 1}}};
}

int EdgeInterval::length() const {
    return direction == Direction::Horizontal ? end.i - start.i : end.j - start.j;
}

bool EdgeInterval::contains(Point p) const {
    if (direction == Direction::Horizontal) return p.j == start.j && p.i >= start.i && p.i <= end.i;
    return p.i == start.i && p.j >= start.j && p.j <= end.j;
}

int CellInterval::length() const {
    return (direction == Direction::Horizontal ? end.i - start.i : end.j - start.j) + 1;
}

namespace {

constexpr std::array<Point, 4> kNeighborOffsets{Point{0, -1}, Point{-1, 0}, Point{1, 0}, Point{0, 1}};

bool contains_sorted(std::span<const Point> sorted, Point p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace

std::vector<std::vector<Point>> connected_components(std::span<const Point> corners) {
    std::vector<Point> cells(corners.begin(), corners.end());
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    std::vector<bool> seen(cells.size(), false);
    std::vector<std::vector<Point>> components;
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Point> component;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t k = stack.back();
            stack.pop_back();
            component.push_back(cells[k]);
            for (Point off : kNeighborOffsets) {
                auto it = std::lower_bound(cells.begin(), cells.end(), cells[k] + off);
                if (it == cells.end() || *it != cells[k] + off) continue;
                auto idx = static_cast<std::size_t>(it - cells.begin());
                if (!seen[idx]) {
                    seen[idx] = true;
                    stack.push_back(idx);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

Polyomino Polyomino::from_cells(std::span<const Point> corners) {
    if (corners.empty()) throw Error(ErrorCode::EmptyInput, "a polyomino needs at least one cell");
    auto components = connected_components(corners);
    if (components.size() > 1) {
        std::ostringstream msg;
        msg << components.size() << " components:";
        for (const auto& comp : components) {
            msg << " {";
            for (std::size_t k = 0; k < comp.size(); ++k) msg << (k ? " " : "") << to_string(comp[k]);
            msg << "}";
        }
        throw Error(ErrorCode::NotConnected, msg.str());
    }
    std::vector<Point> cells = std::move(components.front());
    int min_i = cells.front().i, min_j = cells.front().j;
    for (Point c : cells) {
        min_i = std::min(min_i, c.i);
        min_j = std::min(min_j, c.j);
    }
    for (Point& c : cells) c = c - Point{min_i, min_j};
    std::sort(cells.begin(), cells.end());
    return Polyomino(std::move(cells));
}

Polyomino::Polyomino(std::vector<Point> sorted_cells) : cells_(std::move(sorted_cells)) {
    std::set<Point> verts;
    for (Point c : cells_) {
        for (Point v : Cell{c}.vertices()) verts.insert(v);
        width_ = std::max(width_, c.i + 1);
        height_ = std::max(height_, c.j + 1);
    }
    vertices_.assign(verts.begin(), verts.end());
}

bool Polyomino::contains_cell(Point corner) const { return contains_sorted(cells_, corner); }

std::optional<std::size_t> Polyomino::vertex_index(Point v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Polyomino::cell_index(Point corner) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), corner);
    if (it == cells_.end() || *it != corner) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
}

namespace {

// Is the unit segment starting at v in direction d an edge of some cell?
bool has_unit_edge(const Polyomino& p, Point v, Direction d) {
    if (d == Direction::Horizontal) return p.contains_cell(v) || p.contains_cell(v - Point{0, 1});
    return p.contains_cell(v) || p.contains_cell(v - Point{1, 0});
}

Point step(Direction d) { return d == Direction::Horizontal ? Point{1, 0} : Point{0, 1}; }

}  // namespace

std::vector<EdgeInterval> maximal_edge_intervals(const Polyomino& p, Direction d) {
    std::vector<EdgeInterval> out;
    const bool horizontal = d == Direction::Horizontal;
    const int lines = horizontal ? p.height() + 1 : p.width() + 1;
    const int span = horizontal ? p.width() : p.height();
    for (int line = 0; line < lines; ++line) {
        int run_start = -1;
        for (int pos = 0; pos <= span; ++pos) {
            Point v = horizontal ? Point{pos, line} : Point{line, pos};
            bool present = pos < span && has_unit_edge(p, v, d);
            if (present && run_start < 0) run_start = pos;
            if (!present && run_start >= 0) {
                Point a = horizontal ? Point{run_start, line} : Point{line, run_start};
                out.push_back(EdgeInterval{a, v, d});
                run_start = -1;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EdgeInterval& x, const EdgeInterval& y) {
        return std::tie(x.start, x.end) < std::tie(y.start, y.end);
    });
    return out;
}

EdgeInterval maximal_edge_interval_through(const Polyomino& p, Point v, Direction d) {
    const Point s = step(d);
    Point lo = v, hi = v;
    while (has_unit_edge(p, lo - s, d)) lo = lo - s;
    while (has_unit_edge(p, hi, d)) hi = hi + s;
    return EdgeInterval{lo, hi, d};
}

std::vector<InnerInterval> inner_intervals(const Polyomino& p) {
    std::vector<InnerInterval> out;
    for (Point c : p.cells()) {
        // Grow rectangles with lower-left cell c; the admissible width shrinks
        // as rows are added.
        int max_width = 0;
        while (p.contains_cell(c + Point{max_width, 0})) ++max_width;
        for (int h = 1; max_width > 0; ++h) {
            for (int w = 1; w <= max_width; ++w) out.push_back(InnerInterval{c, c + Point{w, h}});
            int row_width = 0;
            while (row_width < max_width && p.contains_cell(c + Point{row_width, h})) ++row_width;
            max_width = row_width;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cell_degree(const Polyomino& p, Point cell) {
    if (!p.contains_cell(cell))
        throw Error(ErrorCode::CellNotInPolyomino, "cell " + to_string(cell) + " is not in the polyomino");
    int deg = 0;
    for (Point off : kNeighborOffsets) deg += p.contains_cell(cell + off) ? 1 : 0;
    return deg;
}

std::vector<Leaf> leaves_of(std::span<const Point> sorted_cells) {
    std::map<Point, int> owners;
    for (Point c : sorted_cells)
        for (Point v : Cell{c}.vertices()) ++owners[v];
    std::vector<Leaf> out;
    for (Point c : sorted_cells) {
        for (const Edge& e : Cell{c}.edges()) {
            if (owners[e.first] == 1 && owners[e.second] == 1) {
                out.push_back(Leaf{c, e, {e.first, e.second}});
                break;
            }
        }
    }
    return out;
}

std::vector<Leaf> leaves(const Polyomino& p) { return leaves_of(p.cells()); }

CellInterval maximal_cell_interval(const Polyomino& p, Point cell, Direction d) {
    if (!p.contains_cell(cell))
        throw Error(ErrorCode::CellNotInPolyomino, "cell " + to_string(cell) + " is not in the polyomino");
    const Point s = step(d);
    Point lo = cell, hi = cell;
    while (p.contains_cell(lo - s)) lo = lo - s;
    while (p.contains_cell(hi + s)) hi = hi + s;
    return CellInterval{lo, hi, d};
}

std::vector<Polyomino> enumerate_polyominoes(std::size_t n) {
    if (n == 0) return {};
    std::set<std::vector<Point>> layer{{Point{0, 0}}};
    for (std::size_t size = 1; size < n; ++size) {
        std::set<std::vector<Point>> next;
        for (const auto& cells : layer) {
            for (Point c : cells) {
                for (Point off : kNeighborOffsets) {
                    Point q = c + off;
                    if (contains_sorted(cells, q)) continue;
                    std::vector<Point> grown = cells;
                    grown.push_back(q);
                    next.insert(Polyomino::from_cells(grown).cells());
                }
            }
        }
        layer = std::move(next);
    }
    std::vector<Polyomino> out;
    out.reserve(layer.size());
    for (const auto& cells : layer) out.push_back(Polyomino::from_cells(cells));
    return out;
}

}  // namespace polyideal
