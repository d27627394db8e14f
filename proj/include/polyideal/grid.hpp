#pragma once

// Polyomino geometry: cells, vertices, edge intervals, inner intervals and
// leaves. Points are ordered row-major (by j, then i) everywhere.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyideal {

struct Point {
    int i = 0;  // column
    int j = 0;  // row

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.i <=> b.i;
    }
    friend Point operator+(Point a, Point b) { return {a.i + b.i, a.j + b.j}; }
    friend Point operator-(Point a, Point b) { return {a.i - b.i, a.j - b.j}; }
};

// Componentwise partial order.
inline bool precedes_or_equal(Point a, Point b) { return a.i <= b.i && a.j <= b.j; }

std::string to_string(Point p);

enum class Direction { Horizontal, Vertical };

// A unit segment between two lattice points, stored with first < second.
struct Edge {
    Point first;
    Point second;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A cell is identified by its lower left corner.
struct Cell {
    Point corner;

    std::array<Point, 4> vertices() const;
    // Ordered bottom, left, right, top; this is also their canonical order.
    std::array<Edge, 4> edges() const;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct EdgeInterval {
    Point start;
    Point end;
    Direction direction = Direction::Horizontal;

    // Number of unit edges.
    int length() const;
    bool contains(Point p) const;

    friend bool operator==(const EdgeInterval&, const EdgeInterval&) = default;
};

struct CellInterval {
    Point start;  // corner of the first cell
    Point end;    // corner of the last cell
    Direction direction = Direction::Horizontal;

    // Number of cells.
    int length() const;

    friend bool operator==(const CellInterval&, const CellInterval&) = default;
};

// Rectangle [lower, upper] of lattice points, lower < upper componentwise.
struct InnerInterval {
    Point lower;
    Point upper;

    friend bool operator==(const InnerInterval&, const InnerInterval&) = default;
    friend auto operator<=>(const InnerInterval&, const InnerInterval&) = default;
};

struct Leaf {
    Point cell;
    Edge free_edge;
    std::array<Point, 2> free_vertices;

    friend bool operator==(const Leaf&, const Leaf&) = default;
};

class Polyomino {
public:
    // Throws Error(EmptyInput) or Error(NotConnected). The result is
    // translated so that the minimal column and row are both zero.
    static Polyomino from_cells(std::span<const Point> corners);
    static Polyomino from_cells(std::initializer_list<Point> corners) {
        return from_cells(std::span<const Point>(corners.begin(), corners.size()));
    }

    // Sorted lower-left corners.
    const std::vector<Point>& cells() const { return cells_; }
    // Sorted vertex set; the position of a vertex is its variable index.
    const std::vector<Point>& vertices() const { return vertices_; }

    std::size_t size() const { return cells_.size(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    int width() const { return width_; }
    int height() const { return height_; }

    bool contains_cell(Point corner) const;
    std::optional<std::size_t> vertex_index(Point v) const;
    std::optional<std::size_t> cell_index(Point corner) const;

    friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }

private:
    explicit Polyomino(std::vector<Point> sorted_cells);

    std::vector<Point> cells_;
    std::vector<Point> vertices_;
    int width_ = 0;
    int height_ = 0;
};

// Edge-connected components of an arbitrary cell set, each sorted.
std::vector<std::vector<Point>> connected_components(std::span<const Point> corners);

std::vector<EdgeInterval> maximal_edge_intervals(const Polyomino& p, Direction d);

// The maximal interval of direction d containing vertex v; v must be in V(P).
EdgeInterval maximal_edge_interval_through(const Polyomino& p, Point v, Direction d);

// Sorted by lower corner, then upper corner.
std::vector<InnerInterval> inner_intervals(const Polyomino& p);

int cell_degree(const Polyomino& p, Point cell);

// Leaves of a raw sorted cell set (not necessarily normalized). For a
// single cell the canonically smallest edge is reported.
std::vector<Leaf> leaves_of(std::span<const Point> sorted_cells);

std::vector<Leaf> leaves(const Polyomino& p);

CellInterval maximal_cell_interval(const Polyomino& p, Point cell, Direction d);

// All fixed polyominoes with exactly n cells, up to translation, sorted.
std::vector<Polyomino> enumerate_polyominoes(std::size_t n);

}  // namespace polyideal
