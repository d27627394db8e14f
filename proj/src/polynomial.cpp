#include "polyideal/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyideal::alg {

namespace {

auto by_key = [](const Term& a, const Term& b) { return key_less(a.monomial, b.monomial); };

// Merge two key-sorted term lists as a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
        if (k == b.size() || (i < a.size() && key_less(a[i].monomial, b[k].monomial))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || key_less(b[k].monomial, a[i].monomial)) {
            out.push_back(Term{b[k].monomial, sign > 0 ? b[k].coeff : Rational(-b[k].coeff)});
            ++k;
        } else {
            Rational c = sign > 0 ? Rational(a[i].coeff + b[k].coeff) : Rational(a[i].coeff - b[k].coeff);
            if (c != 0) out.push_back(Term{a[i].monomial, c});
            ++i;
            ++k;
        }
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(const Monomial& m, Rational c) {
    if (c != 0) terms_.push_back(Term{m, std::move(c)});
}

Polynomial Polynomial::binomial(const Monomial& plus, const Monomial& minus) {
    return Polynomial(plus) - Polynomial(minus);
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), by_key);
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, by_key);
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    auto it = std::max_element(terms_.begin(), terms_.end(), [&order](const Term& a, const Term& b) {
        return order.less(a.monomial, b.monomial);
    });
    return *it;
}

bool Polynomial::is_pure_difference() const {
    if (terms_.size() != 2) return false;
    return (terms_[0].coeff == 1 && terms_[1].coeff == -1) || (terms_[0].coeff == -1 && terms_[1].coeff == 1);
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms_ = merge(a.terms_, b.terms_, +1);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms_ = merge(a.terms_, b.terms_, -1);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) terms.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
    return Polynomial::from_terms(std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
    std::vector<Term> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms_) terms.push_back(Term{t.monomial * m, t.coeff});
    return Polynomial::from_terms(std::move(terms));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    if (c == 0) return Polynomial{};
    Polynomial out = a;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    return true;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(),
              [&order](const Term& a, const Term& b) { return order.less(b.monomial, a.monomial); });
    return out;
}

namespace {

std::string render(const std::vector<Term>& terms, const VariableNamer& name) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const Rational& c = terms[k].coeff;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (k == 0) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        const bool unit_monomial = terms[k].monomial.is_one();
        if (mag != 1 || unit_monomial) {
            out += mag.get_str();
            if (!unit_monomial) out += "*";
        }
        if (!unit_monomial) out += alg::to_string(terms[k].monomial, name);
    }
    return out;
}

}  // namespace

std::string Polynomial::to_string(const VariableNamer& name) const { return render(terms_, name); }

std::string Polynomial::to_string(const MonomialOrder& order, const VariableNamer& name) const {
    return render(sorted_terms(order), name);
}

}  // namespace polyideal::alg
