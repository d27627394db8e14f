#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/polyideal.hpp"

namespace fixtures {

using polyideal::Point;
using polyideal::Polyomino;

inline Polyomino p1() { return Polyomino::from_cells({{0, 0}}); }
inline Polyomino p2() { return Polyomino::from_cells({{0, 0}, {1, 0}}); }
inline Polyomino p3() { return Polyomino::from_cells({{0, 0}, {1, 0}, {0, 1}}); }
inline Polyomino p4() { return Polyomino::from_cells({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
// 3x3 frame around the hole (1,1).
inline Polyomino p5() {
    return Polyomino::from_cells({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
}
// Staple: a vertical bar with arms at rows 0 and 2 and a stub at (0,1).
inline Polyomino p6() { return Polyomino::from_cells({{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 2}}); }

inline std::vector<Polyomino> all_fixtures() { return {p1(), p2(), p3(), p4(), p5(), p6()}; }

inline std::size_t var(const Polyomino& p, int i, int j) { return *p.vertex_index({i, j}); }

// x_a * x_b as a monomial over the vertex variables of p.
inline polyideal::alg::Monomial xs(const Polyomino& p, std::initializer_list<Point> pts) {
    polyideal::alg::Monomial m;
    for (Point q : pts) m = m * polyideal::alg::Monomial::variable(var(p, q.i, q.j));
    return m;
}

inline polyideal::alg::Polynomial binom(const Polyomino& p, std::initializer_list<Point> plus,
                                        std::initializer_list<Point> minus) {
    return polyideal::alg::Polynomial::binomial(xs(p, plus), xs(p, minus));
}

// A random integer combination of cell labelings: admissible by construction.
inline polyideal::Labeling random_admissible(const Polyomino& p, std::mt19937_64& rng, int spread = 2) {
    polyideal::Labeling alpha(p.vertex_count());
    for (Point c : p.cells()) {
        const auto z = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
        alpha = alpha + z * polyideal::cell_labeling(p, c);
    }
    return alpha;
}

}  // namespace fixtures
