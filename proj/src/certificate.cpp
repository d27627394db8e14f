#include "polyideal/certificate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polyideal/classify.hpp"
#include "polyideal/error.hpp"

namespace polyideal {

namespace {

struct GoodLeaf {
    Point cell;
    Point good_vertex;   // its maximal interval matches the cell interval
    Point other_vertex;
    Direction direction;
};

GoodLeaf pick_good_leaf(const Polyomino& q) {
    for (const Leaf& leaf : leaves(q)) {
        const CellInterval interval = leaf_cell_interval(q, leaf);
        for (int k = 0; k < 2; ++k) {
            const Point v = leaf.free_vertices[k];
            if (maximal_edge_interval_through(q, v, interval.direction).length() == interval.length())
                return {leaf.cell, v, leaf.free_vertices[1 - k], interval.direction};
        }
    }
    // Every tree-like polyomino has at least two good leaves.
    throw Error(ErrorCode::NotTreeLike, "no good leaf left");
}

class Replay {
public:
    Replay(const Polyomino& p, const Labeling& alpha) : p_(p) {
        for (auto [pt, value] : alpha.by_point(p)) alpha_[pt] = value;
    }

    std::vector<CertificateStep> run() {
        std::vector<Point> remaining = p_.cells();
        while (!alpha_.empty()) {
            if (remaining.empty()) throw std::logic_error("labeling survived the last cell");
            const Polyomino q = Polyomino::from_cells(remaining);
            const Point offset = lower_left(remaining);
            const GoodLeaf leaf = pick_good_leaf(q);
            const Point a1 = leaf.other_vertex + offset;
            const Point a2 = leaf.good_vertex + offset;
            if (at(a1) < 0) {
                for (auto& [pt, value] : alpha_) value = -value;
                sign_ = -sign_;
            }
            while (at(a1) > 0) {
                const EdgeInterval run = maximal_edge_interval_through(q, leaf.good_vertex, leaf.direction);
                Point c{};
                for (Point v : q.vertices())
                    if (run.contains(v) && at(v + offset) > 0) {
                        c = v + offset;
                        break;
                    }
                step(a1, a2, c);
            }
            remaining.erase(std::find(remaining.begin(), remaining.end(), leaf.cell + offset));
        }
        return std::move(steps_);
    }

private:
    static Point lower_left(const std::vector<Point>& cells) {
        Point low = cells.front();
        for (Point c : cells) low = {std::min(low.i, c.i), std::min(low.j, c.j)};
        return low;
    }

    std::int64_t at(Point v) const {
        auto it = alpha_.find(v);
        return it == alpha_.end() ? 0 : it->second;
    }

    void add(Point v, std::int64_t delta) {
        if ((alpha_[v] += delta) == 0) alpha_.erase(v);
    }

    std::size_t var(Point v) const { return *p_.vertex_index(v); }

    // f_alpha = (x^alpha+ / x_c x_a1) g + x^(alpha- - beta-) f_beta with
    // g = x_c x_a1 - x_d x_a2 and beta = alpha - e_a1 - e_c + e_a2 + e_d.
    void step(Point a1, Point a2, Point c) {
        const Point d = a1 + c - a2;
        const InnerInterval rect{{std::min({c.i, a1.i, a2.i}), std::min({c.j, a1.j, a2.j})},
                                 {std::max({c.i, a1.i, a2.i}), std::max({c.j, a1.j, a2.j})}};
        const bool diagonal = (c == rect.lower && a1 == rect.upper) || (a1 == rect.lower && c == rect.upper);

        alg::Monomial plus;
        for (auto [pt, value] : alpha_)
            if (value > 0) plus.set(var(pt), static_cast<unsigned>(value));
        const alg::Monomial head = alg::Monomial::variable(var(c)) * alg::Monomial::variable(var(a1));
        steps_.push_back({sign_ * (diagonal ? 1 : -1), carried_ * (plus / head), rect});

        alg::Monomial shrink = alg::Monomial::variable(var(a2));
        if (at(d) < 0) shrink = shrink * alg::Monomial::variable(var(d));
        carried_ = carried_ * shrink;
        add(a1, -1);
        add(c, -1);
        add(a2, 1);
        add(d, 1);
    }

    const Polyomino& p_;
    std::map<Point, std::int64_t> alpha_;
    int sign_ = 1;
    alg::Monomial carried_;
    std::vector<CertificateStep> steps_;
};

}  // namespace

Certificate balanced_certificate_treelike(const Polyomino& p, const Labeling& alpha) {
    if (!is_tree_like(p).tree_like) throw Error(ErrorCode::NotTreeLike, "certificates need a tree-like polyomino");
    if (!is_admissible(p, alpha)) throw Error(ErrorCode::NotAdmissible, "labeling violates an interval sum");
    Certificate cert{alpha, alpha.is_zero() ? alg::Polynomial{} : labeling_binomial(alpha), {}};
    cert.steps = Replay(p, alpha).run();
    return cert;
}

alg::Polynomial expand_certificate(const Polyomino& p, const Certificate& cert) {
    alg::Polynomial sum;
    for (const auto& s : cert.steps) {
        const alg::Polynomial term = inner_minor(p, s.minor) * s.multiplier;
        sum = s.sign > 0 ? sum + term : sum - term;
    }
    return sum;
}

}  // namespace polyideal
