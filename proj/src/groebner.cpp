#include "polyideal/groebner.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string_view>
#include <unordered_set>

#include "polyideal/error.hpp"

namespace polyideal::alg {

std::size_t default_step_limit() {
    constexpr std::size_t kDefault = 1'000'000;
    const char* env = std::getenv("POLYIDEAL_GB_STEP_LIMIT");
    if (env == nullptr) return kDefault;
    std::string_view text(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefault;
    return value;
}

namespace {

// Terms sorted descending under the active order.
using Terms = std::vector<Term>;

// h[start..] - c * m * g, all lists descending.
Terms subtract_multiple(Terms&& h, std::size_t start, const Rational& c, const Monomial& m, const Terms& g,
                        const MonomialOrder& order) {
    Terms out;
    out.reserve(h.size() - start + g.size());
    std::size_t i = start, k = 0;
    Monomial scaled;
    bool have_scaled = false;
    while (i < h.size() || k < g.size()) {
        if (k < g.size() && !have_scaled) {
            scaled = g[k].monomial * m;
            have_scaled = true;
        }
        if (k == g.size()) {
            out.push_back(std::move(h[i++]));
            continue;
        }
        if (i == h.size()) {
            out.push_back(Term{scaled, -(c * g[k].coeff)});
            ++k;
            have_scaled = false;
            continue;
        }
        auto cmp = order.compare(h[i].monomial, scaled);
        if (cmp > 0) {
            out.push_back(std::move(h[i++]));
        } else if (cmp < 0) {
            out.push_back(Term{scaled, -(c * g[k].coeff)});
            ++k;
            have_scaled = false;
        } else {
            Rational coeff = std::move(h[i].coeff);
            coeff -= c * g[k].coeff;
            if (coeff != 0) out.push_back(Term{scaled, std::move(coeff)});
            ++i;
            ++k;
            have_scaled = false;
        }
    }
    return out;
}

void make_monic(Terms& t) {
    if (t.empty() || t.front().coeff == 1) return;
    Rational inv = 1 / t.front().coeff;
    for (auto& term : t) term.coeff *= inv;
}

// Full reduction of f by divisors (each nonzero, descending). Only the
// pointers in divisors are consulted, in order.
Terms reduce(Terms h, const std::vector<const Terms*>& divisors, const MonomialOrder& order) {
    Terms remainder;
    std::size_t start = 0;
    while (start < h.size()) {
        const Term& lead = h[start];
        const Terms* hit = nullptr;
        for (const Terms* d : divisors) {
            if (d->front().monomial.divides(lead.monomial)) {
                hit = d;
                break;
            }
        }
        if (hit == nullptr) {
            remainder.push_back(std::move(h[start]));
            ++start;
            continue;
        }
        Rational c = lead.coeff / hit->front().coeff;
        Monomial m = lead.monomial / hit->front().monomial;
        h = subtract_multiple(std::move(h), start, c, m, *hit, order);
        start = 0;
    }
    return remainder;
}

Terms spoly(const Terms& f, const Terms& g, const MonomialOrder& order) {
    const Monomial l = lcm(f.front().monomial, g.front().monomial);
    Terms lhs;
    lhs.reserve(f.size());
    const Monomial mf = l / f.front().monomial;
    const Rational cf = 1 / f.front().coeff;
    for (const auto& t : f) lhs.push_back(Term{t.monomial * mf, t.coeff * cf});
    return subtract_multiple(std::move(lhs), 0, 1 / g.front().coeff, l / g.front().monomial, g, order);
}

Polynomial to_polynomial(Terms t) { return Polynomial::from_terms(std::move(t)); }

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

class Buchberger {
public:
    Buchberger(const MonomialOrder& order, const GroebnerOptions& options) : order_(order), options_(options) {}

    void add_input(Terms f) {
        make_monic(f);
        update(std::move(f));
    }

    void run() {
        while (!pairs_.empty()) {
            if (++processed_ > options_.step_limit)
                throw Error(ErrorCode::StepLimitExceeded,
                            "Buchberger exceeded " + std::to_string(options_.step_limit) + " S-pairs");
            // Normal strategy: smallest lcm first.
            auto best = pairs_.begin();
            for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it)
                if (order_.less(it->lcm, best->lcm)) best = it;
            Pair p = *best;
            *best = pairs_.back();
            pairs_.pop_back();

            Terms h = reduce(spoly(polys_[p.i], polys_[p.j], order_), active_divisors(), order_);
            if (h.empty()) {
                ++zero_reductions_;
                continue;
            }
            make_monic(h);
            update(std::move(h));
        }
    }

    GroebnerBasis finish() {
        // Minimalize: drop elements whose leading monomial is divisible by
        // another's (keeping the earliest among equal ones).
        std::vector<std::size_t> minimal;
        for (std::size_t a : active_) {
            bool redundant = false;
            for (std::size_t b : active_) {
                if (a == b) continue;
                const Monomial& la = polys_[a].front().monomial;
                const Monomial& lb = polys_[b].front().monomial;
                if (lb.divides(la) && (!(la == lb) || b < a)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(a);
        }
        std::vector<const Terms*> divisors;
        for (std::size_t a : minimal) divisors.push_back(&polys_[a]);
        std::vector<Terms> reduced;
        for (std::size_t a : minimal) {
            const Terms& g = polys_[a];
            Terms tail(g.begin() + 1, g.end());
            Terms r = reduce(std::move(tail), divisors, order_);
            Terms full{g.front()};
            full.insert(full.end(), r.begin(), r.end());
            make_monic(full);
            reduced.push_back(std::move(full));
        }
        std::sort(reduced.begin(), reduced.end(), [this](const Terms& x, const Terms& y) {
            return order_.less(x.front().monomial, y.front().monomial);
        });
        GroebnerBasis gb{{}, order_, processed_, zero_reductions_};
        for (auto& t : reduced) gb.elements.push_back(to_polynomial(std::move(t)));
        return gb;
    }

private:
    std::vector<const Terms*> active_divisors() const {
        std::vector<const Terms*> out;
        out.reserve(active_.size());
        for (std::size_t a : active_) out.push_back(&polys_[a]);
        return out;
    }

    // Gebauer-Moeller installation of a new basis element.
    void update(Terms h_terms) {
        const std::size_t h = polys_.size();
        polys_.push_back(std::move(h_terms));
        const Monomial& lh = polys_[h].front().monomial;

        std::vector<Pair> candidates;
        for (std::size_t g : active_) candidates.push_back(Pair{g, h, lcm(polys_[g].front().monomial, lh)});

        std::vector<Pair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const Pair& p = candidates[k];
            const bool coprime = lh.coprime_with(polys_[p.i].front().monomial);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t q = k + 1; q < candidates.size() && !dominated; ++q)
                    dominated = candidates[q].lcm.divides(p.lcm);
                for (std::size_t q = 0; q < kept.size() && !dominated; ++q)
                    dominated = kept[q].lcm.divides(p.lcm);
            }
            if (coprime || !dominated) kept.push_back(p);
        }

        std::vector<Pair> next;
        next.reserve(pairs_.size() + kept.size());
        for (const Pair& p : pairs_) {
            const bool chain = lh.divides(p.lcm) &&
                               !(lcm(polys_[p.i].front().monomial, lh) == p.lcm) &&
                               !(lcm(polys_[p.j].front().monomial, lh) == p.lcm);
            if (!chain) next.push_back(p);
        }
        for (const Pair& p : kept)
            if (!lh.coprime_with(polys_[p.i].front().monomial)) next.push_back(p);
        pairs_ = std::move(next);

        std::vector<std::size_t> still_active;
        for (std::size_t g : active_)
            if (!lh.divides(polys_[g].front().monomial)) still_active.push_back(g);
        still_active.push_back(h);
        active_ = std::move(still_active);
    }

    const MonomialOrder& order_;
    const GroebnerOptions& options_;
    std::vector<Terms> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    std::size_t processed_ = 0;
    std::size_t zero_reductions_ = 0;
};

std::vector<Terms> sorted_all(std::span<const Polynomial> polys, const MonomialOrder& order) {
    std::vector<Terms> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.sorted_terms(order));
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
    std::vector<Terms> sorted;
    for (const auto& d : divisors)
        if (!d.is_zero()) sorted.push_back(d.sorted_terms(order));
    std::vector<const Terms*> ptrs;
    for (const auto& t : sorted) ptrs.push_back(&t);
    return to_polynomial(reduce(f.sorted_terms(order), ptrs, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    return to_polynomial(spoly(f.sorted_terms(order), g.sorted_terms(order), order));
}

GroebnerBasis buchberger(const IdealGens& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
    Buchberger engine(order, options);
    for (const auto& f : ideal.generators)
        if (!f.is_zero()) engine.add_input(f.sorted_terms(order));
    engine.run();
    return engine.finish();
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order, bool skip_coprime) {
    std::vector<Terms> sorted = sorted_all(basis, order);
    std::vector<const Terms*> ptrs;
    for (const auto& t : sorted)
        if (!t.empty()) ptrs.push_back(&t);
    for (std::size_t a = 0; a < ptrs.size(); ++a) {
        for (std::size_t b = a + 1; b < ptrs.size(); ++b) {
            if (skip_coprime && ptrs[a]->front().monomial.coprime_with(ptrs[b]->front().monomial)) continue;
            if (!reduce(spoly(*ptrs[a], *ptrs[b], order), ptrs, order).empty()) return false;
        }
    }
    return true;
}

bool ideal_equal(const IdealGens& a, const IdealGens& b, const GroebnerOptions& options) {
    const std::size_t n = std::max(a.nvars, b.nvars);
    const MonomialOrder order = MonomialOrder::canonical(n);
    return buchberger(a, order, options).elements == buchberger(b, order, options).elements;
}

IdealGens saturate(const IdealGens& ideal, std::span<const std::size_t> vars, const GroebnerOptions& options) {
    const std::size_t n = ideal.nvars;
    const std::size_t w = n;
    if (n + 1 > kMaxVariables)
        throw Error(ErrorCode::TooManyVariables, "saturation needs one auxiliary variable beyond " + std::to_string(n));

    std::vector<std::int64_t> weights(n + 1, 0);
    weights[w] = 1;
    std::vector<std::size_t> perm(n + 1);
    for (std::size_t k = 0; k <= n; ++k) perm[k] = k;
    const MonomialOrder elimination(Scheme::DegRevLex, std::move(perm), std::move(weights));

    Monomial product = Monomial::variable(w);
    for (std::size_t v : vars) product = product * Monomial::variable(v);
    IdealGens extended{ideal.generators, n + 1};
    extended.generators.push_back(Polynomial(product) - Polynomial(Monomial{}));

    GroebnerBasis gb = buchberger(extended, elimination, options);
    IdealGens out{{}, n};
    for (auto& g : gb.elements) {
        bool uses_w = std::any_of(g.terms().begin(), g.terms().end(),
                                  [w](const Term& t) { return t.monomial[w] != 0; });
        if (!uses_w) out.generators.push_back(std::move(g));
    }
    // The surviving elements already form the reduced degrevlex basis of the
    // elimination ideal; re-sort under the canonical order for stability.
    const MonomialOrder canonical = MonomialOrder::canonical(n);
    std::sort(out.generators.begin(), out.generators.end(), [&canonical](const Polynomial& x, const Polynomial& y) {
        return canonical.less(x.leading_term(canonical).monomial, y.leading_term(canonical).monomial);
    });
    return out;
}

bool is_homogeneous(const Polynomial& f) {
    if (f.is_zero()) return true;
    const unsigned d = f.terms().front().monomial.degree();
    return std::all_of(f.terms().begin(), f.terms().end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

IdealGens saturate_iterated(const IdealGens& ideal, std::span<const std::size_t> vars, const GroebnerOptions& options) {
    for (const auto& f : ideal.generators)
        if (!is_homogeneous(f))
            throw Error(ErrorCode::InvalidArgument, "iterated saturation needs homogeneous generators");
    const std::size_t n = ideal.nvars;
    IdealGens current = ideal;
    for (std::size_t v : vars) {
        std::vector<std::size_t> perm;
        for (std::size_t k = 0; k < n; ++k)
            if (k != v) perm.push_back(k);
        perm.push_back(v);
        const MonomialOrder order(Scheme::DegRevLex, std::move(perm));
        GroebnerBasis gb = buchberger(current, order, options);
        IdealGens next{{}, n};
        for (const auto& g : gb.elements) {
            unsigned power = ~0u;
            for (const auto& t : g.terms()) power = std::min(power, t.monomial[v]);
            if (power == 0) {
                next.generators.push_back(g);
                continue;
            }
            const Monomial divisor = Monomial::variable(v, power);
            std::vector<Term> terms;
            for (const auto& t : g.terms()) terms.push_back(Term{t.monomial / divisor, t.coeff});
            next.generators.push_back(Polynomial::from_terms(std::move(terms)));
        }
        current = std::move(next);
    }
    const MonomialOrder canonical = MonomialOrder::canonical(n);
    return IdealGens{buchberger(current, canonical, options).elements, n};
}

std::vector<Monomial> initial_ideal(std::span<const Polynomial> basis, const MonomialOrder& order) {
    std::vector<Monomial> out;
    for (const auto& g : basis)
        if (!g.is_zero()) out.push_back(g.leading_term(order).monomial);
    return out;
}

bool is_squarefree(std::span<const Monomial> monomials) {
    return std::all_of(monomials.begin(), monomials.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

namespace {

struct HittingSet {
    std::vector<std::uint64_t> supports;
    std::unordered_set<std::uint64_t> visited;
    int best = 0;

    // chosen: variables removed so far.
    void search(std::uint64_t chosen, int size) {
        if (size >= best) return;
        if (!visited.insert(chosen).second) return;
        const std::uint64_t* unhit = nullptr;
        for (const auto& s : supports) {
            if ((s & chosen) == 0 && (unhit == nullptr || std::popcount(s) < std::popcount(*unhit))) unhit = &s;
        }
        if (unhit == nullptr) {
            best = size;
            return;
        }
        for (std::uint64_t rest = *unhit; rest != 0; rest &= rest - 1)
            search(chosen | (rest & (~rest + 1)), size + 1);
    }
};

}  // namespace

std::size_t quotient_dimension(std::span<const Monomial> gens, std::size_t nvars) {
    if (nvars > 64) throw Error(ErrorCode::TooManyVariables, "dimension search supports at most 64 variables");
    HittingSet hs;
    for (const auto& g : gens) {
        std::uint64_t mask = 0;
        for (std::size_t v : g.support()) mask |= std::uint64_t{1} << v;
        if (mask == 0) return 0;  // the unit ideal
        hs.supports.push_back(mask);
    }
    // Keep only inclusion-minimal supports.
    std::sort(hs.supports.begin(), hs.supports.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint64_t> minimal;
    for (auto s : hs.supports)
        if (std::none_of(minimal.begin(), minimal.end(), [s](std::uint64_t m) { return (m & s) == m; }))
            minimal.push_back(s);
    hs.supports = std::move(minimal);
    hs.best = static_cast<int>(nvars) + 1;
    hs.search(0, 0);
    return nvars - static_cast<std::size_t>(hs.best);
}

}  // namespace polyideal::alg
