#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "polyideal/classify.hpp"
#include "polyideal/cli/generate.hpp"
#include "polyideal/error.hpp"

using namespace polyideal;
using namespace fixtures;

namespace {

// Euler characteristic of the closed union of cells; it is 1 minus the
// number of holes for a connected polyomino.
long euler_characteristic(const Polyomino& p) {
    std::set<Point> vertices;
    std::set<Edge> edges;
    for (Point c : p.cells()) {
        const Cell cell{c};
        for (Point v : cell.vertices()) vertices.insert(v);
        for (const Edge& e : cell.edges()) edges.insert(e);
    }
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) + static_cast<long>(p.size());
}

bool runs_contiguous(const Polyomino& p, bool rows) {
    std::map<int, std::vector<int>> lines;
    for (Point c : p.cells()) lines[rows ? c.j : c.i].push_back(rows ? c.i : c.j);
    for (auto& [_, xs] : lines) {
        std::sort(xs.begin(), xs.end());
        if (xs.back() - xs.front() + 1 != static_cast<int>(xs.size())) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("convexity") {
    CHECK(is_row_convex(p4()));
    CHECK(is_column_convex(p4()));
    CHECK_FALSE(is_row_convex(p5()));
    CHECK_FALSE(is_column_convex(p5()));
    CHECK(is_row_convex(p1()));
    CHECK(is_column_convex(p1()));
    // The staple has a gap in column 2 only.
    CHECK(is_row_convex(p6()));
    CHECK_FALSE(is_column_convex(p6()));

    for (std::size_t n = 1; n <= 6; ++n)
        for (const Polyomino& p : enumerate_polyominoes(n)) {
            CHECK(is_row_convex(p) == runs_contiguous(p, true));
            CHECK(is_column_convex(p) == runs_contiguous(p, false));
        }
}

TEST_CASE("simplicity") {
    const auto r5 = is_simple(p5());
    CHECK_FALSE(r5.simple);
    REQUIRE(r5.hole.has_value());
    CHECK(*r5.hole == Point{1, 1});
    CHECK(is_simple(p2()).simple);
    CHECK(is_simple(p6()).simple);
    CHECK_FALSE(is_simple(p6()).hole.has_value());

    for (std::size_t n = 1; n <= 8; ++n)
        for (const Polyomino& p : enumerate_polyominoes(n)) {
            const auto r = is_simple(p);
            CHECK(r.simple == (euler_characteristic(p) == 1));
            if (!r.simple) {
                REQUIRE(r.hole.has_value());
                CHECK_FALSE(p.contains_cell(*r.hole));
            }
        }
}

TEST_CASE("tree-like fixtures") {
    CHECK(is_tree_like(p3()).tree_like);
    CHECK(is_tree_like(p6()).tree_like);
    CHECK(is_tree_like(p1()).tree_like);

    const auto r4 = is_tree_like(p4());
    CHECK_FALSE(r4.tree_like);
    CHECK(r4.stuck == p4().cells());
    const auto e4 = is_tree_like(p4(), TreeMode::Exhaustive);
    CHECK_FALSE(e4.tree_like);
    CHECK(leaves_of(e4.stuck).empty());

    CHECK_FALSE(is_tree_like(p5()).tree_like);
}

TEST_CASE("exhaustive mode bound") {
    const Polyomino bar = Polyomino::from_cells(
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}, {8, 0}, {9, 0}, {10, 0}});
    try {
        is_tree_like(bar, TreeMode::Exhaustive);
        FAIL("expected BoundExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundExceeded);
    }
    CHECK(is_tree_like(bar, TreeMode::Exhaustive, 11).tree_like);
    CHECK(is_tree_like(bar).tree_like);
}

TEST_CASE("peel, exhaustive and randomized peel agree") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Polyomino& p : enumerate_polyominoes(n)) {
            const bool peel = is_tree_like(p).tree_like;
            CHECK(peel == is_tree_like(p, TreeMode::Exhaustive).tree_like);
            for (std::uint64_t s = 0; s < 3; ++s) CHECK(peel == peel_randomized(p, s).tree_like);
        }
}

TEST_CASE("leaf classification") {
    CHECK(classify_leaf(p3(), {1, 0}) == LeafKind::Good);
    CHECK(classify_leaf(p6(), {0, 1}) == LeafKind::Bad);
    CHECK(classify_leaf(p6(), {2, 0}) == LeafKind::Good);
    CHECK(classify_leaf(p1(), {0, 0}) == LeafKind::Good);
    try {
        classify_leaf(p6(), {1, 1});
        FAIL("expected NotALeaf");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotALeaf);
    }

    const auto iv = leaf_cell_interval(p6(), leaves(p6())[1]);
    CHECK(iv.length() == 2);
}

TEST_CASE("leaf census on fixtures") {
    const auto c3 = leaf_census(p3());
    CHECK(c3.n1 == 2);
    CHECK(c3.n2 == 1);
    CHECK(c3.n3 == 0);
    CHECK(c3.n4 == 0);
    CHECK(c3.good_leaves == std::vector<Point>{{1, 0}, {0, 1}});
    CHECK(c3.bad_leaves.empty());

    const auto c6 = leaf_census(p6());
    CHECK(c6.n1 == 3);
    CHECK(c6.n2 == 2);
    CHECK(c6.n3 == 1);
    CHECK(c6.n4 == 0);
    CHECK(c6.good_leaves == std::vector<Point>{{2, 0}, {2, 2}});
    CHECK(c6.bad_leaves == std::vector<Point>{{0, 1}});
    REQUIRE(c6.blocking_cells.size() == 1);
    CHECK(c6.blocking_cells.at({0, 1}) == Point{1, 1});

    const auto c1 = leaf_census(p1());
    CHECK(c1.n0 == 1);
    CHECK(c1.n1 + c1.n2 + c1.n3 + c1.n4 == 0);
    CHECK(c1.good_leaves == std::vector<Point>{{0, 0}});
    CHECK(c1.bad_leaves.empty());
}

TEST_CASE("connection graph") {
    const auto g3 = connection_graph(p3());
    CHECK(g3.vertex_count == 3);
    CHECK(g3.edges.size() == 2);
    CHECK(g3.is_tree());

    const auto g4 = connection_graph(p4());
    CHECK(g4.edges.size() == 4);
    CHECK_FALSE(g4.is_tree());
    for (std::size_t v = 0; v < 4; ++v)
        CHECK(std::count_if(g4.edges.begin(), g4.edges.end(),
                            [&](const auto& e) { return e.first == v || e.second == v; }) == 2);

    const auto g1 = connection_graph(p1());
    CHECK(g1.vertex_count == 1);
    CHECK(g1.edges.empty());
    CHECK(g1.is_tree());
}

TEST_CASE("tree-like invariants on all small polyominoes") {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const Polyomino& p : enumerate_polyominoes(n)) {
            const auto census = leaf_census(p);
            // A degree-one cell can touch a corner across each free edge, so
            // leaves undercount n1 outside the tree-like class.
            CHECK(census.good_leaves.size() + census.bad_leaves.size() <= census.n1);
            CHECK(census.n1 + census.n2 + census.n3 + census.n4 == p.size());

            const bool tree = is_tree_like(p).tree_like;
            if (is_row_convex(p) || is_column_convex(p) || tree) CHECK(is_simple(p).simple);
            if (!tree) continue;
            CHECK(connection_graph(p).is_tree());
            CHECK(census.n1 == census.good_leaves.size() + census.bad_leaves.size());
            CHECK(census.n1 == census.n3 + 2 * census.n4 + 2);
            CHECK(census.good_leaves.size() >= 2);
            CHECK(census.bad_leaves.size() <= census.n3);
            std::set<Point> blockers;
            for (Point bad : census.bad_leaves) {
                const Point d = census.blocking_cells.at(bad);
                CHECK(cell_degree(p, d) == 3);
                blockers.insert(d);
            }
            CHECK(blockers.size() == census.bad_leaves.size());
        }
}
