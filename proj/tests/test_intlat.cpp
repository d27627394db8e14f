#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "polyideal/cli/generate.hpp"
#include "polyideal/intlat.hpp"
#include "polyideal/polyideal.hpp"

using namespace polyideal;
using namespace polyideal::lat;
using namespace fixtures;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> rs;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        IntVector v;
        for (long x : r) v.push_back(x);
        cols = v.size();
        rs.push_back(std::move(v));
    }
    return IntMatrix::from_rows(rs, cols);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
    return m;
}

// Cofactor expansion; only for tiny matrices.
Integer laplace(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, col = 0; k < n; ++k)
                if (k != c) minor(r - 1, col++) = m(r, k);
        total += (c % 2 == 0 ? 1 : -1) * m(0, c) * laplace(minor);
    }
    return total;
}

// Rank over Q by plain Gaussian elimination with rationals.
std::size_t rational_rank(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// gcd of all k x k minors, k = 1..min(rows, cols).
std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
    std::vector<Integer> out;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= n; ++k) {
        Integer g = 0;
        // Iterate over k-subsets of rows and columns by bitmask.
        for (std::uint32_t rs = 0; rs < (1u << m.rows()); ++rs) {
            if (static_cast<std::size_t>(std::popcount(rs)) != k) continue;
            for (std::uint32_t cs = 0; cs < (1u << m.cols()); ++cs) {
                if (static_cast<std::size_t>(std::popcount(cs)) != k) continue;
                IntMatrix sub(k, k);
                std::size_t r = 0;
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    if (!(rs >> i & 1)) continue;
                    std::size_t c = 0;
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        if (cs >> j & 1) sub(r, c++) = m(i, j);
                    ++r;
                }
                Integer d = laplace(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        }
        out.push_back(g);
    }
    return out;
}

bool unimodular(const IntMatrix& u) {
    const Integer d = determinant(u);
    return d == 1 || d == -1;
}

IntVector times(const IntVector& x, const IntMatrix& m) {
    IntVector out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += x[r] * m(r, c);
    return out;
}

}  // namespace

TEST_CASE("determinant") {
    CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix m = random_matrix(rng, 4, 4, 9);
        CHECK(determinant(m) == laplace(m));
    }
}

TEST_CASE("hermite normal form examples") {
    const auto h = hermite_normal_form(mat({{1, 1}, {0, 1}}));
    CHECK(h.h == IntMatrix::identity(2));
    CHECK(hermite_normal_form(IntMatrix::identity(3)).h == IntMatrix::identity(3));
    CHECK(hermite_normal_form(mat({{2, 4}})).h == mat({{2, 4}}));
    CHECK(hermite_normal_form(mat({{-2, 4}})).h == mat({{2, -4}}));
}

TEST_CASE("hermite normal form properties") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 150; ++t) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        const IntMatrix m = random_matrix(rng, rows, cols, t % 2 ? 3 : 20);
        const auto hf = hermite_normal_form(m);
        CHECK(hf.u * m == hf.h);
        CHECK(unimodular(hf.u));
        CHECK(hf.rank() == rational_rank(m));
        for (std::size_t r = 0; r < hf.rank(); ++r) {
            const std::size_t pc = hf.pivot_cols[r];
            if (r > 0) CHECK(pc > hf.pivot_cols[r - 1]);
            CHECK(hf.h(r, pc) > 0);
            for (std::size_t c = 0; c < pc; ++c) CHECK(hf.h(r, c) == 0);
            for (std::size_t above = 0; above < r; ++above) {
                CHECK(hf.h(above, pc) >= 0);
                CHECK(hf.h(above, pc) < hf.h(r, pc));
            }
        }
        for (std::size_t r = hf.rank(); r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) CHECK(hf.h(r, c) == 0);
    }
}

TEST_CASE("smith normal form examples") {
    const auto s = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(s.d == mat({{1, 0}, {0, 6}}));
    CHECK(s.invariant_factors == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));
    CHECK(smith_normal_form(cell_lattice_basis(p2()).vectors).invariant_factors == std::vector<Integer>{1, 1});
}

TEST_CASE("smith normal form matches determinantal divisors") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 120; ++t) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        const IntMatrix m = random_matrix(rng, rows, cols, t % 3 == 0 ? 12 : 4);
        const auto s = smith_normal_form(m);
        CHECK(s.left * m * s.right == s.d);
        CHECK(unimodular(s.left));
        CHECK(unimodular(s.right));

        const auto dk = determinantal_divisors(m);
        Integer prefix = 1;
        std::size_t k = 0;
        for (; k < s.invariant_factors.size(); ++k) {
            prefix *= s.invariant_factors[k];
            CHECK(prefix == dk[k]);
            if (k > 0) CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);
            CHECK(s.invariant_factors[k] > 0);
        }
        for (; k < dk.size(); ++k) CHECK(dk[k] == 0);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (r != c) CHECK(s.d(r, c) == 0);
    }
}

TEST_CASE("kernel basis examples") {
    const auto k1 = kernel_basis(mat({{1, 1}}));
    REQUIRE(k1.rank() == 1);
    CHECK((k1.vectors == mat({{1, -1}}) || k1.vectors == mat({{-1, 1}})));

    const auto kp1 = kernel_basis(admissible_matrix(p1()));
    REQUIRE(kp1.rank() == 1);
    const IntVector b = cell_lattice_basis(p1()).vectors.row(0);
    CHECK((kp1.vectors.row(0) == b || times(IntVector{-1}, kp1.vectors) == b));

    CHECK(kernel_basis(admissible_matrix(p5())).rank() == 9);
}

TEST_CASE("kernel basis properties") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 120; ++t) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 7;
        const IntMatrix m = random_matrix(rng, rows, cols, 5);
        const auto k = kernel_basis(m);
        CHECK(k.rank() == cols - rational_rank(m));
        CHECK(rational_rank(k.vectors) == k.rank());
        if (k.rank() > 0) {
            CHECK(m * k.vectors.transpose() == IntMatrix(rows, k.rank()));
            CHECK(is_saturated(k));
        }
    }
}

TEST_CASE("lattice coordinates") {
    const auto b2 = cell_lattice_basis(p2());
    const Polyomino q = p2();
    IntVector v(q.vertex_count(), 0);
    v[var(q, 0, 0)] = 1;
    v[var(q, 0, 1)] = -1;
    v[var(q, 2, 0)] = -1;
    v[var(q, 2, 1)] = 1;
    CHECK(lattice_coordinates(b2, v) == IntVector{1, 1});

    const auto b1 = cell_lattice_basis(p1());
    CHECK(lattice_coordinates(b1, b1.vectors.row(0)) == IntVector{1});
    IntVector e00(4, 0);
    e00[0] = 1;
    CHECK_FALSE(lattice_coordinates(b1, e00).has_value());

    // Round trip on random combinations, and a non-member by doubling a
    // non-saturated basis.
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const IntMatrix m = random_matrix(rng, 3, 6, 4);
        const auto k = kernel_basis(m);
        if (k.rank() == 0) continue;
        IntVector x(k.rank());
        for (auto& z : x) z = static_cast<long>(rng() % 11) - 5;
        CHECK(lattice_coordinates(k, times(x, k.vectors)) == x);
    }
    const LatticeBasis doubled{mat({{2, 0}, {0, 1}})};
    CHECK_FALSE(lattice_coordinates(doubled, IntVector{1, 0}).has_value());
    CHECK(lattice_coordinates(doubled, IntVector{4, -3}) == IntVector{2, -3});
}

TEST_CASE("saturation test") {
    CHECK(is_saturated(LatticeBasis{mat({{1, -1}})}));
    CHECK_FALSE(is_saturated(LatticeBasis{mat({{2, 0}})}));
    CHECK(is_saturated(cell_lattice_basis(p4())));
}

TEST_CASE("cell lattice is saturated of full rank") {
    std::vector<Polyomino> ps = all_fixtures();
    for (std::uint64_t s = 0; s < 40; ++s) ps.push_back(cli::random_polyomino(2 + s % 8, 100 + s));
    for (const Polyomino& p : ps) {
        const auto basis = cell_lattice_basis(p);
        CHECK(rank(basis.vectors) == p.size());
        const auto snf = smith_normal_form(basis.vectors);
        CHECK(snf.invariant_factors.size() == p.size());
        for (const auto& f : snf.invariant_factors) CHECK(f == 1);
    }
}
