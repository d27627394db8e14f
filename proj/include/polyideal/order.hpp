#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyideal/monomial.hpp"

namespace polyideal::alg {

enum class Scheme { Lex, DegLex, DegRevLex };

// A monomial order on nvars variables. The permutation lists variables from
// most to least significant; an optional non-negative weight vector is
// compared first and the scheme breaks ties.
class MonomialOrder {
public:
    MonomialOrder(Scheme scheme, std::size_t nvars);
    MonomialOrder(Scheme scheme, std::vector<std::size_t> permutation, std::vector<std::int64_t> weights = {});

    // Degrevlex with the identity permutation: x0 > x1 > ... .
    static MonomialOrder canonical(std::size_t nvars) { return MonomialOrder(Scheme::DegRevLex, nvars); }

    // Grammar: lex|deglex|degrevlex[:perm=<list>][:weights=<list>].
    // Throws Error(InvalidArgument).
    static MonomialOrder parse(std::string_view spec, std::size_t nvars);

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    Scheme scheme() const { return scheme_; }
    std::size_t variable_count() const { return permutation_.size(); }
    const std::vector<std::size_t>& permutation() const { return permutation_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    std::string to_string() const;

private:
    Scheme scheme_;
    std::vector<std::size_t> permutation_;
    std::vector<std::int64_t> weights_;
};

}  // namespace polyideal::alg
