#include "polyideal/cli/generate.hpp"

#include <random>
#include <set>
#include <vector>

#include "polyideal/error.hpp"

namespace polyideal::cli {

Polyomino random_polyomino(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::InvalidCount, "a polyomino needs at least one cell");
    std::mt19937_64 rng(seed);
    std::set<Point> cells{{0, 0}};
    std::set<Point> boundary{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (cells.size() < n) {
        auto it = boundary.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(rng() % boundary.size()));
        const Point c = *it;
        boundary.erase(it);
        cells.insert(c);
        for (Point off : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}})
            if (!cells.contains(c + off)) boundary.insert(c + off);
    }
    const std::vector<Point> list(cells.begin(), cells.end());
    return Polyomino::from_cells(list);
}

}  // namespace polyideal::cli
