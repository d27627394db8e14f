#pragma once

// Cycles of a polyomino, their binomials, and the check that the primitive
// cycle binomials form a Groebner basis of I_P under a sample of orders.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/groebner.hpp"
#include "polyideal/polyideal.hpp"

namespace polyideal {

// Closed vertex sequence a_1..a_k (a_{k+1} = a_1 implied). Canonical form:
// a_1 is the least vertex and a_1 -> a_2 is horizontal.
struct Cycle {
    std::vector<Point> vertices;

    std::size_t length() const { return vertices.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Distinct vertices of P, an even number k >= 4 of them, each consecutive
// pair (cyclically) inside one maximal edge interval, with the directions
// alternating all the way round.
bool is_cycle(const Polyomino& p, std::span<const Point> vertices);

// No maximal edge interval holds more than two of the cycle's vertices.
bool is_primitive(const Polyomino& p, const Cycle& c);

// Rotates and, if needed, reverses a valid cycle into canonical form.
Cycle canonical_cycle(std::span<const Point> vertices);

// Every cycle with at most max_vertices vertices, once each, canonical,
// sorted by length and then lexicographically.
std::vector<Cycle> enumerate_cycles(const Polyomino& p, std::size_t max_vertices, bool primitive_only);

// 2 * min(#horizontal, #vertical) maximal intervals: no primitive cycle is
// longer.
std::size_t primitive_cycle_bound(const Polyomino& p);

// prod of x at odd positions minus prod at even positions (1-based).
alg::Polynomial cycle_binomial(const Polyomino& p, const Cycle& c);
// +1 at odd positions, -1 at even positions.
Labeling cycle_labeling(const Polyomino& p, const Cycle& c);

// Alternating-sign walk on a nonzero admissible labeling, always taking the
// smallest eligible vertex. The returned cycle alternates the signs of
// alpha. Throws Error(ZeroLabeling) or Error(NotAdmissible).
Cycle extract_cycle(const Polyomino& p, const Labeling& alpha);

// lex, deglex, degrevlex, five seeded variable permutations (schemes taken
// in that rotation) and five seeded weight vectors with degrevlex ties.
std::vector<alg::MonomialOrder> order_sample(std::size_t nvars, std::uint64_t seed);

struct OrderOutcome {
    std::string order;
    bool cycles_in_ideal = false;          // every candidate reduces to zero modulo GB(I_P)
    bool candidates_form_gb = false;       // and their leading monomials generate in(I_P)
    bool basis_within_candidates = false;  // reduced GB of I_P is made of +-f_C
    bool squarefree_initial = false;
    std::size_t basis_size = 0;

    bool passed() const {
        return cycles_in_ideal && candidates_form_gb && basis_within_candidates && squarefree_initial;
    }
};

struct UniversalGbReport {
    std::size_t candidate_count = 0;
    std::vector<OrderOutcome> outcomes;  // one per order, in input order

    bool passed() const;
};

// Candidates are the primitive cycle binomials. A subset of I_P is a
// Groebner basis exactly when its leading monomials generate in(I_P), which
// is how candidates_form_gb is decided; it agrees with reducing every
// S-pair of the candidates, at a fraction of the cost. Throws Error(NotBalanced)
// when P is not balanced and Error(InvalidArgument) for an empty order list.
UniversalGbReport universal_gb_check(const Polyomino& p, std::span<const alg::MonomialOrder> orders,
                                     const alg::GroebnerOptions& options = {});

}  // namespace polyideal
