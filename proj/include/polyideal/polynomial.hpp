#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyideal/monomial.hpp"
#include "polyideal/order.hpp"

namespace polyideal::alg {

using Rational = mpq_class;

struct Term {
    Monomial monomial;
    Rational coeff;
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// storage-key order, so equal polynomials compare equal; order-dependent
// queries take the MonomialOrder explicitly.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Monomial& m, Rational c = 1);

    // m1 - m2 with unit coefficients.
    static Polynomial binomial(const Monomial& plus, const Monomial& minus);
    // Any term order; like monomials are combined and zeros dropped.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Coefficient of m (zero if absent).
    Rational coefficient(const Monomial& m) const;

    const Term& leading_term(const MonomialOrder& order) const;

    // Pure difference binomial: two terms with coefficients +1 and -1.
    bool is_pure_difference() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Monomial& m);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Terms sorted descending under order.
    std::vector<Term> sorted_terms(const MonomialOrder& order) const;

    std::string to_string(const VariableNamer& name = default_variable_name) const;
    // Display with terms descending under order.
    std::string to_string(const MonomialOrder& order, const VariableNamer& name = default_variable_name) const;

private:
    std::vector<Term> terms_;
};

}  // namespace polyideal::alg
