#include "polyideal/polyideal.hpp"

#include <algorithm>
#include <numeric>

#include "polyideal/error.hpp"

namespace polyideal {

alg::VariableNamer vertex_namer(const Polyomino& p) {
    return [verts = p.vertices()](std::size_t var) {
        if (var >= verts.size()) return "w" + std::to_string(var);
        return "x" + std::to_string(verts[var].i) + "_" + std::to_string(verts[var].j);
    };
}

Labeling Labeling::from_points(const Polyomino& p, const std::map<Point, std::int64_t>& values) {
    Labeling out(p.vertex_count());
    for (auto [pt, value] : values) {
        auto idx = p.vertex_index(pt);
        if (!idx) throw Error(ErrorCode::InvalidArgument, "point " + to_string(pt) + " is not a vertex");
        out[*idx] = value;
    }
    return out;
}

Labeling Labeling::from_vector(const lat::IntVector& v) {
    Labeling out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "label out of range");
        out[k] = v[k].get_si();
    }
    return out;
}

bool Labeling::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](std::int64_t x) { return x == 0; });
}

std::map<Point, std::int64_t> Labeling::by_point(const Polyomino& p) const {
    std::map<Point, std::int64_t> out;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k] != 0) out[p.vertices()[k]] = values_[k];
    return out;
}

lat::IntVector Labeling::to_vector() const {
    lat::IntVector out;
    out.reserve(values_.size());
    for (auto x : values_) out.emplace_back(static_cast<long>(x));
    return out;
}

Labeling operator+(const Labeling& a, const Labeling& b) {
    Labeling out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

Labeling operator-(const Labeling& a, const Labeling& b) {
    Labeling out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
    return out;
}

Labeling operator*(std::int64_t k, const Labeling& a) {
    Labeling out = a;
    for (auto& x : out.values_) x *= k;
    return out;
}

namespace {

std::size_t var(const Polyomino& p, Point v) {
    auto idx = p.vertex_index(v);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "point " + to_string(v) + " is not a vertex");
    return *idx;
}

void require_variable_budget(const Polyomino& p) {
    if (p.vertex_count() > alg::kMaxVariables)
        throw Error(ErrorCode::TooManyVariables, std::to_string(p.vertex_count()) + " vertices exceed the " +
                                                     std::to_string(alg::kMaxVariables) + "-variable limit");
}

std::vector<std::size_t> all_variables(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

}  // namespace

alg::Polynomial inner_minor(const Polyomino& p, const InnerInterval& r) {
    using alg::Monomial;
    const Monomial diagonal = Monomial::variable(var(p, r.lower)) * Monomial::variable(var(p, r.upper));
    const Monomial anti = Monomial::variable(var(p, {r.lower.i, r.upper.j})) *
                          Monomial::variable(var(p, {r.upper.i, r.lower.j}));
    return alg::Polynomial::binomial(diagonal, anti);
}

alg::IdealGens inner_minors(const Polyomino& p) {
    require_variable_budget(p);
    alg::IdealGens out{{}, p.vertex_count()};
    for (const auto& r : inner_intervals(p)) out.generators.push_back(inner_minor(p, r));
    return out;
}

Labeling cell_labeling(const Polyomino& p, Point cell) {
    if (!p.contains_cell(cell)) throw Error(ErrorCode::CellNotInPolyomino, to_string(cell));
    Labeling alpha(p.vertex_count());
    alpha[var(p, cell)] = 1;
    alpha[var(p, cell + Point{1, 1})] = 1;
    alpha[var(p, cell + Point{1, 0})] = -1;
    alpha[var(p, cell + Point{0, 1})] = -1;
    return alpha;
}

lat::LatticeBasis cell_lattice_basis(const Polyomino& p) {
    lat::IntMatrix m(0, p.vertex_count());
    for (Point c : p.cells()) m.append_row(cell_labeling(p, c).to_vector());
    return lat::LatticeBasis{m};
}

std::optional<lat::IntVector> cell_coordinates(const Polyomino& p, const lat::IntVector& v) {
    if (v.size() != p.vertex_count()) throw Error(ErrorCode::InvalidArgument, "vector length != |V(P)|");
    std::vector<Point> lex = p.vertices();
    std::sort(lex.begin(), lex.end(), [](Point a, Point b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    lat::IntVector residual = v;
    lat::IntVector coords(p.size());
    for (Point a : lex) {
        const lat::Integer& value = residual[var(p, a)];
        if (value == 0) continue;
        auto cell = p.cell_index(a);
        if (!cell) return std::nullopt;
        const lat::Integer z = value;
        coords[*cell] = z;
        residual[var(p, a)] -= z;
        residual[var(p, a + Point{1, 1})] -= z;
        residual[var(p, a + Point{1, 0})] += z;
        residual[var(p, a + Point{0, 1})] += z;
    }
    return coords;
}

lat::IntMatrix admissible_matrix(const Polyomino& p) {
    lat::IntMatrix m(0, p.vertex_count());
    for (Direction d : {Direction::Horizontal, Direction::Vertical}) {
        for (const auto& interval : maximal_edge_intervals(p, d)) {
            lat::IntVector row(p.vertex_count());
            for (std::size_t k = 0; k < p.vertex_count(); ++k)
                if (interval.contains(p.vertices()[k])) row[k] = 1;
            m.append_row(row);
        }
    }
    return m;
}

bool is_admissible(const Polyomino& p, const Labeling& alpha) {
    if (alpha.size() != p.vertex_count()) return false;
    for (Direction d : {Direction::Horizontal, Direction::Vertical}) {
        for (const auto& interval : maximal_edge_intervals(p, d)) {
            std::int64_t sum = 0;
            for (std::size_t k = 0; k < p.vertex_count(); ++k)
                if (interval.contains(p.vertices()[k])) sum += alpha[k];
            if (sum != 0) return false;
        }
    }
    return true;
}

alg::Polynomial labeling_binomial(const Labeling& alpha) {
    if (alpha.is_zero()) throw Error(ErrorCode::ZeroLabeling, "f_alpha needs a nonzero labeling");
    if (alpha.size() > alg::kMaxVariables) throw Error(ErrorCode::TooManyVariables, "labeling too long");
    alg::Monomial plus, minus;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        const std::int64_t a = alpha[k];
        if (a > 0) plus.set(k, static_cast<unsigned>(a));
        if (a < 0) minus.set(k, static_cast<unsigned>(-a));
    }
    return alg::Polynomial::binomial(plus, minus);
}

Labeling binomial_to_labeling(const alg::Polynomial& f, std::size_t nvars) {
    if (!f.is_pure_difference()) throw Error(ErrorCode::InvalidArgument, "not a pure difference binomial");
    const auto& t = f.terms();
    const alg::Monomial& plus = t[0].coeff == 1 ? t[0].monomial : t[1].monomial;
    const alg::Monomial& minus = t[0].coeff == 1 ? t[1].monomial : t[0].monomial;
    if (!plus.coprime_with(minus)) throw Error(ErrorCode::InvalidArgument, "binomial terms share a variable");
    Labeling alpha(nvars);
    for (auto [v, e] : plus.sparse()) {
        if (v >= nvars) throw Error(ErrorCode::InvalidArgument, "variable outside the ring");
        alpha[v] = e;
    }
    for (auto [v, e] : minus.sparse()) {
        if (v >= nvars) throw Error(ErrorCode::InvalidArgument, "variable outside the ring");
        alpha[v] = -static_cast<std::int64_t>(e);
    }
    return alpha;
}

lat::LatticeBasis admissible_lattice(const Polyomino& p) { return lat::kernel_basis(admissible_matrix(p)); }

alg::IdealGens lattice_ideal(const Polyomino& p, const lat::LatticeBasis& basis, const alg::GroebnerOptions& options) {
    require_variable_budget(p);
    alg::IdealGens gens{{}, p.vertex_count()};
    for (std::size_t r = 0; r < basis.rank(); ++r)
        gens.generators.push_back(labeling_binomial(Labeling::from_vector(basis.vectors.row(r))));
    const auto vars = all_variables(p.vertex_count());
    return alg::saturate(gens, vars, options);
}

BalancedReport is_balanced(const Polyomino& p, const alg::GroebnerOptions& options) {
    require_variable_budget(p);
    BalancedReport report;
    report.cell_count = p.size();
    const lat::LatticeBasis admissible = admissible_lattice(p);
    report.admissible_rank = admissible.rank();
    // height J_P = rank of the admissible lattice, height I_P <= |P|.
    if (report.admissible_rank != p.size()) {
        report.witness = BalancedReport::Witness::RankMismatch;
        return report;
    }

    // Both lattices are saturated, so with equal ranks the admissible
    // lattice is the cell lattice whenever it contains it; its cell basis
    // then gives a smaller generating set for the same lattice ideal.
    bool same_lattice = true;
    for (std::size_t r = 0; r < admissible.rank() && same_lattice; ++r)
        same_lattice = cell_coordinates(p, admissible.vectors.row(r)).has_value();
    const alg::IdealGens j_p = lattice_ideal(p, same_lattice ? cell_lattice_basis(p) : admissible, options);

    const auto order = alg::MonomialOrder::canonical(p.vertex_count());
    const alg::GroebnerBasis gb_i = alg::buchberger(inner_minors(p), order, options);
    const alg::GroebnerBasis gb_j = alg::buchberger(j_p, order, options);
    if (gb_i.elements == gb_j.elements) {
        report.balanced = true;
        report.witness = BalancedReport::Witness::SharedBasis;
        report.shared_basis = gb_i.elements;
        return report;
    }
    report.witness = BalancedReport::Witness::GeneratorOutside;
    for (const auto& g : gb_j.elements) {
        if (!alg::normal_form(g, gb_i.elements, order).is_zero()) {
            report.outside_generator = g;
            break;
        }
    }
    return report;
}

PrimeReport primality(const Polyomino& p, const alg::GroebnerOptions& options) {
    const alg::IdealGens ideal = inner_minors(p);
    const auto order = alg::MonomialOrder::canonical(p.vertex_count());
    const alg::GroebnerBasis gb = alg::buchberger(ideal, order, options);
    const alg::IdealGens saturation = alg::saturate(ideal, all_variables(p.vertex_count()), options);
    PrimeReport report;
    report.ideal_basis_size = gb.elements.size();
    report.saturation_basis_size = saturation.generators.size();
    report.prime = gb.elements == saturation.generators;
    if (!report.prime) {
        for (const auto& g : saturation.generators) {
            if (!alg::normal_form(g, gb.elements, order).is_zero()) {
                report.witness = g;
                break;
            }
        }
    }
    return report;
}

std::size_t dimension(const Polyomino& p, const alg::GroebnerOptions& options) {
    const auto order = alg::MonomialOrder::canonical(p.vertex_count());
    const alg::GroebnerBasis gb = alg::buchberger(inner_minors(p), order, options);
    return alg::quotient_dimension(alg::initial_ideal(gb.elements, order), p.vertex_count());
}

}  // namespace polyideal
