#include "polyideal/cycles.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>

#include "polyideal/error.hpp"

namespace polyideal {

namespace {

// Maximal interval membership of every vertex, by variable index.
struct IntervalIndex {
    std::array<std::vector<std::size_t>, 2> of;                    // [direction][vertex]
    std::array<std::vector<std::vector<std::size_t>>, 2> members;  // [direction][interval]

    explicit IntervalIndex(const Polyomino& p) {
        for (int d = 0; d < 2; ++d) {
            const auto intervals = maximal_edge_intervals(p, d == 0 ? Direction::Horizontal : Direction::Vertical);
            of[d].assign(p.vertex_count(), 0);
            members[d].assign(intervals.size(), {});
            for (std::size_t k = 0; k < intervals.size(); ++k)
                for (std::size_t v = 0; v < p.vertex_count(); ++v)
                    if (intervals[k].contains(p.vertices()[v])) {
                        of[d][v] = k;
                        members[d][k].push_back(v);
                    }
        }
    }

};

std::size_t index_of(const Polyomino& p, Point v) {
    auto idx = p.vertex_index(v);
    if (!idx) throw Error(ErrorCode::InvalidArgument, to_string(v) + " is not a vertex");
    return *idx;
}

class CycleSearch {
public:
    CycleSearch(const Polyomino& p, std::size_t max_vertices, bool primitive_only)
        : p_(p), index_(p), max_(max_vertices), primitive_(primitive_only) {
        used_.assign(p.vertex_count(), false);
        for (int d = 0; d < 2; ++d) count_[d].assign(index_.members[d].size(), 0);
    }

    std::vector<Cycle> run() {
        for (std::size_t s = 0; s < p_.vertex_count(); ++s) {
            start_ = s;
            push(s);
            extend(s, 0);
            pop(s);
        }
        std::sort(found_.begin(), found_.end(), [](const Cycle& a, const Cycle& b) {
            if (a.length() != b.length()) return a.length() < b.length();
            return a < b;
        });
        return std::move(found_);
    }

private:
    bool push(std::size_t v) {
        used_[v] = true;
        path_.push_back(v);
        bool ok = true;
        for (int d = 0; d < 2; ++d) ok &= ++count_[d][index_.of[d][v]] <= 2;
        return ok || !primitive_;
    }

    void pop(std::size_t v) {
        used_[v] = false;
        path_.pop_back();
        for (int d = 0; d < 2; ++d) --count_[d][index_.of[d][v]];
    }

    // Steps alternate horizontal (d = 0) and vertical (d = 1), starting
    // horizontally; only vertices after the start may appear.
    void extend(std::size_t v, int d) {
        const std::size_t k = path_.size();
        if (d == 1 && k >= 4 && index_.of[1][v] == index_.of[1][start_]) {
            Cycle c;
            for (auto idx : path_) c.vertices.push_back(p_.vertices()[idx]);
            found_.push_back(std::move(c));
        }
        if (k >= max_) return;
        for (std::size_t u : index_.members[d][index_.of[d][v]]) {
            if (u <= start_ || used_[u]) continue;
            if (push(u)) extend(u, 1 - d);
            pop(u);
        }
    }

    const Polyomino& p_;
    IntervalIndex index_;
    std::size_t max_;
    bool primitive_;
    std::size_t start_ = 0;
    std::vector<bool> used_;
    std::array<std::vector<int>, 2> count_;
    std::vector<std::size_t> path_;
    std::vector<Cycle> found_;
};

}  // namespace

bool is_cycle(const Polyomino& p, std::span<const Point> vertices) {
    const std::size_t k = vertices.size();
    if (k < 4 || k % 2 != 0) return false;
    std::vector<Point> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Point v : vertices)
        if (!p.vertex_index(v)) return false;

    const IntervalIndex index(p);
    int previous = -1;
    for (std::size_t t = 0; t <= k; ++t) {
        const Point a = vertices[t % k], b = vertices[(t + 1) % k];
        int d;
        if (a.j == b.j) d = 0;
        else if (a.i == b.i) d = 1;
        else return false;
        if (index.of[d][index_of(p, a)] != index.of[d][index_of(p, b)]) return false;
        if (d == previous) return false;
        previous = d;
    }
    return true;
}

bool is_primitive(const Polyomino& p, const Cycle& c) {
    const IntervalIndex index(p);
    std::array<std::vector<int>, 2> count;
    for (int d = 0; d < 2; ++d) count[d].assign(index.members[d].size(), 0);
    for (Point v : c.vertices) {
        const std::size_t idx = index_of(p, v);
        for (int d = 0; d < 2; ++d)
            if (++count[d][index.of[d][idx]] > 2) return false;
    }
    return true;
}

Cycle canonical_cycle(std::span<const Point> vertices) {
    const std::size_t k = vertices.size();
    if (k == 0) return {};
    const std::size_t s = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    const bool forward = vertices[(s + 1) % k].j == vertices[s].j;
    Cycle c;
    for (std::size_t t = 0; t < k; ++t) c.vertices.push_back(vertices[forward ? (s + t) % k : (s + k - t) % k]);
    return c;
}

std::vector<Cycle> enumerate_cycles(const Polyomino& p, std::size_t max_vertices, bool primitive_only) {
    return CycleSearch(p, max_vertices, primitive_only).run();
}

std::size_t primitive_cycle_bound(const Polyomino& p) {
    return 2 * std::min(maximal_edge_intervals(p, Direction::Horizontal).size(),
                        maximal_edge_intervals(p, Direction::Vertical).size());
}

alg::Polynomial cycle_binomial(const Polyomino& p, const Cycle& c) {
    alg::Monomial odd, even;
    for (std::size_t t = 0; t < c.length(); ++t)
        (t % 2 == 0 ? odd : even).set(index_of(p, c.vertices[t]), 1);
    return alg::Polynomial::binomial(odd, even);
}

Labeling cycle_labeling(const Polyomino& p, const Cycle& c) {
    Labeling alpha(p.vertex_count());
    for (std::size_t t = 0; t < c.length(); ++t) alpha[index_of(p, c.vertices[t])] = t % 2 == 0 ? 1 : -1;
    return alpha;
}

Cycle extract_cycle(const Polyomino& p, const Labeling& alpha) {
    if (alpha.size() != p.vertex_count()) throw Error(ErrorCode::InvalidArgument, "labeling length != |V(P)|");
    if (alpha.is_zero()) throw Error(ErrorCode::ZeroLabeling, "the walk needs a nonzero labeling");
    if (!is_admissible(p, alpha)) throw Error(ErrorCode::NotAdmissible, "labeling violates an interval sum");

    const IntervalIndex index(p);
    std::size_t a = 0;
    while (alpha[a] <= 0) ++a;
    std::map<std::size_t, std::size_t> position;
    std::vector<std::size_t> walk;
    for (int d = 0; !position.contains(a); d = 1 - d) {
        position[a] = walk.size();
        walk.push_back(a);
        const bool positive = alpha[a] > 0;
        const auto& members = index.members[d][index.of[d][a]];
        // Admissibility guarantees an opposite sign in every interval met.
        a = *std::find_if(members.begin(), members.end(),
                          [&](std::size_t u) { return positive ? alpha[u] < 0 : alpha[u] > 0; });
    }
    std::vector<Point> tail;
    for (std::size_t t = position[a]; t < walk.size(); ++t) tail.push_back(p.vertices()[walk[t]]);
    return canonical_cycle(tail);
}

std::vector<alg::MonomialOrder> order_sample(std::size_t nvars, std::uint64_t seed) {
    using alg::MonomialOrder;
    using alg::Scheme;
    std::vector<MonomialOrder> out{MonomialOrder(Scheme::Lex, nvars), MonomialOrder(Scheme::DegLex, nvars),
                                   MonomialOrder(Scheme::DegRevLex, nvars)};
    std::mt19937_64 rng(seed);
    const Scheme schemes[] = {Scheme::Lex, Scheme::DegLex, Scheme::DegRevLex};
    for (int k = 0; k < 5; ++k) {
        std::vector<std::size_t> perm(nvars);
        for (std::size_t v = 0; v < nvars; ++v) perm[v] = v;
        // Fisher-Yates spelled out so the sample is identical on every
        // standard library.
        for (std::size_t v = nvars; v > 1; --v) std::swap(perm[v - 1], perm[rng() % v]);
        out.emplace_back(schemes[k % 3], std::move(perm));
    }
    for (int k = 0; k < 5; ++k) {
        std::vector<std::size_t> identity(nvars);
        for (std::size_t v = 0; v < nvars; ++v) identity[v] = v;
        std::vector<std::int64_t> weights(nvars);
        for (auto& w : weights) w = static_cast<std::int64_t>(rng() % 10);
        out.emplace_back(Scheme::DegRevLex, std::move(identity), std::move(weights));
    }
    return out;
}

bool UniversalGbReport::passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const OrderOutcome& o) { return o.passed(); });
}

UniversalGbReport universal_gb_check(const Polyomino& p, std::span<const alg::MonomialOrder> orders,
                                     const alg::GroebnerOptions& options) {
    if (orders.empty()) throw Error(ErrorCode::InvalidArgument, "no monomial orders given");
    if (!is_balanced(p, options).balanced) throw Error(ErrorCode::NotBalanced, "the universal basis check needs a balanced polyomino");

    const alg::IdealGens ideal = inner_minors(p);
    std::vector<alg::Polynomial> candidates;
    for (const Cycle& c : enumerate_cycles(p, primitive_cycle_bound(p), true))
        candidates.push_back(cycle_binomial(p, c));

    auto check = [&](const alg::MonomialOrder& order) {
        OrderOutcome out;
        out.order = order.to_string();
        const alg::GroebnerBasis gb = alg::buchberger(ideal, order, options);
        out.basis_size = gb.elements.size();
        out.cycles_in_ideal = std::all_of(candidates.begin(), candidates.end(), [&](const auto& f) {
            return alg::normal_form(f, gb.elements, order).is_zero();
        });
        std::vector<alg::Monomial> leads;
        for (const auto& f : candidates) leads.push_back(f.leading_term(order).monomial);
        out.candidates_form_gb =
            out.cycles_in_ideal && std::all_of(gb.elements.begin(), gb.elements.end(), [&](const auto& g) {
                const alg::Monomial& lm = g.leading_term(order).monomial;
                return std::any_of(leads.begin(), leads.end(), [&](const auto& l) { return l.divides(lm); });
            });
        out.basis_within_candidates = std::all_of(gb.elements.begin(), gb.elements.end(), [&](const auto& g) {
            return std::any_of(candidates.begin(), candidates.end(),
                               [&](const auto& f) { return g == f || g == -f; });
        });
        out.squarefree_initial = alg::is_squarefree(alg::initial_ideal(gb.elements, order));
        return out;
    };

    std::vector<std::future<OrderOutcome>> pending;
    for (const auto& order : orders) pending.push_back(std::async(std::launch::async, check, std::cref(order)));
    UniversalGbReport report;
    report.candidate_count = candidates.size();
    for (auto& f : pending) report.outcomes.push_back(f.get());
    return report;
}

}  // namespace polyideal
