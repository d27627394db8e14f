#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polyideal/kernels.hpp"

namespace polyideal::alg {

inline constexpr std::size_t kMaxVariables = kernels::kWidth;

// Dense exponent vector over at most kMaxVariables variables. Unused slots
// are zero, which keeps the SIMD kernels branch free.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t var, unsigned exponent = 1);
    // Sparse constructor; repeated variables accumulate.
    static Monomial from_pairs(std::initializer_list<std::pair<std::size_t, unsigned>> pairs);

    unsigned operator[](std::size_t var) const { return exp_[var]; }
    void set(std::size_t var, unsigned exponent);

    unsigned degree() const { return kernels::active().degree(exp_.data()); }
    bool is_one() const { return degree() == 0; }
    bool is_squarefree() const { return kernels::active().max_exponent(exp_.data()) <= 1; }

    // this | other
    bool divides(const Monomial& other) const {
        return kernels::active().divides(exp_.data(), other.exp_.data());
    }
    bool coprime_with(const Monomial& other) const {
        return kernels::active().coprime(exp_.data(), other.exp_.data());
    }

    // Throws Error(ExponentOverflow).
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Precondition: b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return kernels::active().equal(a.exp_.data(), b.exp_.data());
    }

    // Variables with nonzero exponent, ascending.
    std::vector<std::pair<std::size_t, unsigned>> sparse() const;
    std::vector<std::size_t> support() const;

    const kernels::Exponent* data() const { return exp_.data(); }

    // Plain lexicographic comparison of exponent arrays; a storage key, not
    // a monomial order.
    friend bool key_less(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.exp_.begin(), a.exp_.end(), b.exp_.begin(), b.exp_.end(),
                                            [](auto x, auto y) { return x > y; });
    }

    std::size_t hash() const;

private:
    alignas(32) std::array<kernels::Exponent, kMaxVariables> exp_{};
};

using VariableNamer = std::function<std::string(std::size_t)>;

std::string default_variable_name(std::size_t var);
std::string to_string(const Monomial& m, const VariableNamer& name = default_variable_name);

}  // namespace polyideal::alg
