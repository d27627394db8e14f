#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polyideal/classify.hpp"
#include "polyideal/cli/generate.hpp"
#include "polyideal/error.hpp"
#include "polyideal/polyideal.hpp"

using namespace polyideal;
using namespace fixtures;
using alg::MonomialOrder;
using alg::Polynomial;

namespace {

bool member(const Polynomial& f, const alg::IdealGens& ideal) {
    const auto gb = alg::buchberger(ideal, MonomialOrder::canonical(ideal.nvars));
    return alg::normal_form(f, gb.elements, gb.order).is_zero();
}

bool contains(const alg::IdealGens& big, const alg::IdealGens& small) {
    const auto gb = alg::buchberger(big, MonomialOrder::canonical(big.nvars));
    return std::all_of(small.generators.begin(), small.generators.end(),
                       [&](const auto& f) { return alg::normal_form(f, gb.elements, gb.order).is_zero(); });
}

lat::IntVector lattice_sum(const Polyomino& p, const InnerInterval& r) {
    lat::IntVector v(p.vertex_count(), 0);
    for (Point c : p.cells())
        if (precedes_or_equal(r.lower, c) && precedes_or_equal(c + Point{1, 1}, r.upper)) {
            const auto b = cell_labeling(p, c);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += b[k];
        }
    return v;
}

}  // namespace

TEST_CASE("vertex names") {
    const auto name = vertex_namer(p2());
    CHECK(name(0) == "x0_0");
    CHECK(name(5) == "x2_1");
    CHECK(name(6) == "w6");
}

TEST_CASE("inner minors") {
    const Polyomino p = p1();
    const auto i1 = inner_minors(p);
    REQUIRE(i1.generators.size() == 1);
    CHECK(i1.nvars == 4);
    CHECK(i1.generators[0] == binom(p, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}));
    CHECK(inner_minors(p2()).generators.size() == 3);
    CHECK(inner_minors(p3()).generators.size() == 5);
    CHECK(inner_minors(p5()).generators.size() == 20);

    // Each minor is the binomial of the sum of the cell vectors it covers.
    for (const Polyomino& q : all_fixtures())
        for (const auto& r : inner_intervals(q))
            CHECK(inner_minor(q, r) == labeling_binomial(Labeling::from_vector(lattice_sum(q, r))));
}

TEST_CASE("cell lattice basis") {
    const auto b1 = cell_lattice_basis(p1());
    CHECK(b1.vectors.row(0) == lat::IntVector{1, -1, -1, 1});
    CHECK(cell_lattice_basis(p2()).rank() == 2);
    CHECK(lat::rank(cell_lattice_basis(p2()).vectors) == 2);
    for (const Polyomino& p : all_fixtures()) CHECK(lat::rank(cell_lattice_basis(p).vectors) == p.size());
}

TEST_CASE("cell coordinates solve triangularly") {
    std::mt19937_64 rng(8);
    for (const Polyomino& p : all_fixtures()) {
        const auto basis = cell_lattice_basis(p);
        for (int t = 0; t < 20; ++t) {
            lat::IntVector z(p.size());
            for (auto& x : z) x = static_cast<long>(rng() % 7) - 3;
            lat::IntVector v(p.vertex_count(), 0);
            for (std::size_t r = 0; r < p.size(); ++r)
                for (std::size_t c = 0; c < v.size(); ++c) v[c] += z[r] * basis.vectors(r, c);
            CHECK(cell_coordinates(p, v) == z);
            CHECK(lat::lattice_coordinates(basis, v) == z);
        }
        lat::IntVector e(p.vertex_count(), 0);
        e[0] = 1;
        CHECK_FALSE(cell_coordinates(p, e).has_value());
    }
}

TEST_CASE("admissible matrix") {
    const auto m1 = admissible_matrix(p1());
    CHECK(m1.rows() == 4);
    CHECK(m1.cols() == 4);
    CHECK(lat::rank(m1) == 3);
    const auto m2 = admissible_matrix(p2());
    CHECK(m2.rows() == 5);
    CHECK(lat::rank(m2) == 4);
    const auto m5 = admissible_matrix(p5());
    CHECK(m5.rows() == 8);
    CHECK(m5.cols() == 16);
    CHECK(lat::rank(m5) == 7);
}

TEST_CASE("admissibility") {
    const Polyomino p = p1();
    CHECK(is_admissible(p, cell_labeling(p, {0, 0})));
    Labeling e(4);
    e[0] = 1;
    CHECK_FALSE(is_admissible(p, e));
    const Polyomino q = p2();
    CHECK(is_admissible(q, cell_labeling(q, {0, 0}) + cell_labeling(q, {1, 0})));

    std::mt19937_64 rng(9);
    for (const Polyomino& r : all_fixtures())
        for (int t = 0; t < 10; ++t) CHECK(is_admissible(r, random_admissible(r, rng)));
}

TEST_CASE("labeling binomials") {
    const Polyomino p = p1();
    const Labeling a = cell_labeling(p, {0, 0});
    CHECK(labeling_binomial(a) == binom(p, {{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}));
    CHECK(labeling_binomial(2 * a) == binom(p, {{0, 0}, {0, 0}, {1, 1}, {1, 1}}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
    const Polyomino q = p2();
    CHECK(labeling_binomial(cell_labeling(q, {0, 0}) + cell_labeling(q, {1, 0})) ==
          binom(q, {{0, 0}, {2, 1}}, {{0, 1}, {2, 0}}));
    try {
        labeling_binomial(Labeling(4));
        FAIL("expected ZeroLabeling");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroLabeling);
    }

    std::mt19937_64 rng(10);
    for (int t = 0; t < 30; ++t) {
        const Labeling alpha = random_admissible(p6(), rng, 3);
        if (alpha.is_zero()) continue;
        CHECK(binomial_to_labeling(labeling_binomial(alpha), p6().vertex_count()) == alpha);
    }
    CHECK_THROWS_AS(binomial_to_labeling(Polynomial(xs(p, {{0, 0}})), 4), Error);
}

TEST_CASE("admissible lattice") {
    const auto l1 = admissible_lattice(p1());
    CHECK(l1.rank() == 1);
    CHECK(lat::lattice_coordinates(l1, cell_lattice_basis(p1()).vectors.row(0)).has_value());
    CHECK(admissible_lattice(p2()).rank() == 2);
    CHECK(admissible_lattice(p5()).rank() == 9);
    for (const Polyomino& p : all_fixtures()) {
        const auto l = admissible_lattice(p);
        CHECK(lat::is_saturated(l));
        for (std::size_t r = 0; r < l.rank(); ++r) CHECK(is_admissible(p, Labeling::from_vector(l.vectors.row(r))));
    }
}

TEST_CASE("lattice ideals") {
    const auto l1 = lattice_ideal(p1(), cell_lattice_basis(p1()));
    CHECK(alg::ideal_equal(l1, inner_minors(p1())));
    CHECK(alg::ideal_equal(lattice_ideal(p2(), cell_lattice_basis(p2())), inner_minors(p2())));
}

TEST_CASE("containment chain") {
    for (const Polyomino& p : all_fixtures()) {
        const auto ip = inner_minors(p);
        const auto il = lattice_ideal(p, cell_lattice_basis(p));
        const auto jp = lattice_ideal(p, admissible_lattice(p));
        CHECK(contains(il, ip));
        CHECK(contains(jp, il));
    }
}

TEST_CASE("balanced decisions") {
    const auto r1 = is_balanced(p1());
    CHECK(r1.balanced);
    CHECK(r1.witness == BalancedReport::Witness::SharedBasis);
    CHECK(r1.shared_basis.size() == 1);
    CHECK(is_balanced(p2()).balanced);
    CHECK(is_balanced(p4()).balanced);
    CHECK(is_balanced(p6()).balanced);

    const auto r5 = is_balanced(p5());
    CHECK_FALSE(r5.balanced);
    CHECK(r5.witness == BalancedReport::Witness::RankMismatch);
    CHECK(r5.admissible_rank == 9);
    CHECK(r5.cell_count == 8);
    CHECK_FALSE(alg::ideal_equal(inner_minors(p5()), lattice_ideal(p5(), admissible_lattice(p5()))));
}

TEST_CASE("a generator outside I_P is a real non-member") {
    for (const Polyomino& p : enumerate_polyominoes(7)) {
        const auto r = is_balanced(p);
        if (r.balanced) continue;
        if (r.witness == BalancedReport::Witness::GeneratorOutside) {
            REQUIRE(r.outside_generator.has_value());
            CHECK_FALSE(member(*r.outside_generator, inner_minors(p)));
            CHECK(member(*r.outside_generator, lattice_ideal(p, admissible_lattice(p))));
        } else {
            CHECK(r.admissible_rank != r.cell_count);
        }
        CHECK_FALSE(is_simple(p).simple);
    }
}

TEST_CASE("primality") {
    for (const Polyomino& p : {p1(), p2(), p4()}) {
        const auto r = primality(p);
        CHECK(r.prime);
        CHECK_FALSE(r.witness.has_value());
        CHECK(r.ideal_basis_size == r.saturation_basis_size);
    }
    CHECK(is_prime(p5()));
}

TEST_CASE("dimension") {
    CHECK(dimension(p1()) == 3);
    CHECK(dimension(p2()) == 4);
    CHECK(dimension(p4()) == 5);
    CHECK(dimension(p5()) == 8);
}

TEST_CASE("balanced polyominoes are prime of the expected dimension") {
    std::vector<Polyomino> ps = all_fixtures();
    for (std::uint64_t s = 0; s < 25; ++s) ps.push_back(cli::random_polyomino(2 + s % 6, 500 + s));
    for (const Polyomino& p : ps) {
        if (!is_balanced(p).balanced) continue;
        CHECK(alg::ideal_equal(inner_minors(p), lattice_ideal(p, cell_lattice_basis(p))));
        CHECK(is_prime(p));
        CHECK(dimension(p) == p.vertex_count() - p.size());
    }
}

TEST_CASE("too many variables") {
    std::vector<Point> bar;
    for (int i = 0; i < 40; ++i) bar.push_back({i, 0});
    const Polyomino p = Polyomino::from_cells(bar);
    try {
        is_balanced(p);
        FAIL("expected TooManyVariables");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooManyVariables);
    }
}
