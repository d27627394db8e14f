#pragma once

// Buchberger's algorithm over the rationals and the ideal operations built
// on it: normal forms, ideal equality, saturation, initial ideals and the
// Krull dimension of monomial quotients.

#include <cstddef>
#include <span>
#include <vector>

#include "polyideal/order.hpp"
#include "polyideal/polynomial.hpp"

namespace polyideal::alg {

struct IdealGens {
    std::vector<Polynomial> generators;
    std::size_t nvars = 0;
};

// Reads POLYIDEAL_GB_STEP_LIMIT; 10^6 when unset or unparsable.
std::size_t default_step_limit();

struct GroebnerOptions {
    // Maximum number of S-pairs Buchberger may process before giving up
    // with Error(StepLimitExceeded).
    std::size_t step_limit = default_step_limit();
};

struct GroebnerBasis {
    // Reduced: monic, inter-reduced, ascending by leading monomial.
    std::vector<Polynomial> elements;
    MonomialOrder order;
    std::size_t pairs_processed = 0;
    std::size_t zero_reductions = 0;
};

// Division algorithm. Reduces the topmost reducible term by the first
// divisor (in listed order) whose leading monomial divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

GroebnerBasis buchberger(const IdealGens& ideal, const MonomialOrder& order, const GroebnerOptions& options = {});

// Every S-polynomial of basis reduces to zero modulo basis. With
// skip_coprime the pairs with coprime leading monomials are not formed.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order, bool skip_coprime = false);

// Same ideal, decided by comparing reduced bases under the canonical order.
bool ideal_equal(const IdealGens& a, const IdealGens& b, const GroebnerOptions& options = {});

// F : (prod_{v in vars} x_v)^infinity via one auxiliary variable w and the
// relation w * prod x_v - 1, eliminated under a weight order. Returns the
// reduced canonical basis of the saturation.
IdealGens saturate(const IdealGens& ideal, std::span<const std::size_t> vars, const GroebnerOptions& options = {});

// The same saturation, one variable at a time: a degrevlex basis with x_v
// last, divided by the largest power of x_v. Requires homogeneous input.
IdealGens saturate_iterated(const IdealGens& ideal, std::span<const std::size_t> vars,
                            const GroebnerOptions& options = {});

bool is_homogeneous(const Polynomial& f);

std::vector<Monomial> initial_ideal(std::span<const Polynomial> basis, const MonomialOrder& order);
bool is_squarefree(std::span<const Monomial> monomials);

// Krull dimension of K[x_0..x_{n-1}] / (gens): the largest set of variables
// containing the support of no generator.
std::size_t quotient_dimension(std::span<const Monomial> gens, std::size_t nvars);

}  // namespace polyideal::alg
