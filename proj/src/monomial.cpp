#include "polyideal/monomial.hpp"

#include <limits>

#include "polyideal/error.hpp"

namespace polyideal::alg {

namespace {

void check_variable(std::size_t var) {
    if (var >= kMaxVariables)
        throw Error(ErrorCode::TooManyVariables,
                    "variable index " + std::to_string(var) + " exceeds " + std::to_string(kMaxVariables));
}

void check_exponent(unsigned e) {
    if (e > std::numeric_limits<kernels::Exponent>::max())
        throw Error(ErrorCode::ExponentOverflow, "exponent " + std::to_string(e) + " too large");
}

}  // namespace

Monomial Monomial::variable(std::size_t var, unsigned exponent) {
    Monomial m;
    m.set(var, exponent);
    return m;
}

Monomial Monomial::from_pairs(std::initializer_list<std::pair<std::size_t, unsigned>> pairs) {
    Monomial m;
    for (auto [var, e] : pairs) m.set(var, m[var] + e);
    return m;
}

void Monomial::set(std::size_t var, unsigned exponent) {
    check_variable(var);
    check_exponent(exponent);
    exp_[var] = static_cast<kernels::Exponent>(exponent);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    if (!kernels::active().multiply(a.exp_.data(), b.exp_.data(), out.exp_.data()))
        throw Error(ErrorCode::ExponentOverflow, "monomial product overflows the exponent range");
    return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out;
    kernels::active().quotient(a.exp_.data(), b.exp_.data(), out.exp_.data());
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    kernels::active().lcm(a.exp_.data(), b.exp_.data(), out.exp_.data());
    return out;
}

std::vector<std::pair<std::size_t, unsigned>> Monomial::sparse() const {
    std::vector<std::pair<std::size_t, unsigned>> out;
    for (std::size_t v = 0; v < kMaxVariables; ++v)
        if (exp_[v] != 0) out.emplace_back(v, exp_[v]);
    return out;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < kMaxVariables; ++v)
        if (exp_[v] != 0) out.push_back(v);
    return out;
}

std::size_t Monomial::hash() const {
    // FNV-1a over the exponent bytes.
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : exp_) {
        h = (h ^ (e & 0xff)) * 1099511628211ULL;
        h = (h ^ (e >> 8)) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::string default_variable_name(std::size_t var) { return "x" + std::to_string(var); }

std::string to_string(const Monomial& m, const VariableNamer& name) {
    auto parts = m.sparse();
    if (parts.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += "*";
        out += name(parts[k].first);
        if (parts[k].second > 1) out += "^" + std::to_string(parts[k].second);
    }
    return out;
}

}  // namespace polyideal::alg
