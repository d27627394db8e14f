#include "polyideal/cli/report.hpp"

#include <chrono>
#include <map>

#include "polyideal/classify.hpp"
#include "polyideal/cli/gridtext.hpp"
#include "polyideal/polyideal.hpp"

namespace polyideal::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Json point_json(Point p) { return Json::array({p.i, p.j}); }

Json points_json(const std::vector<Point>& pts) {
    Json out = Json::array();
    for (Point p : pts) out.push_back(point_json(p));
    return out;
}

Json document(const Polyomino& p) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["polyomino"] = polyomino_json(p);
    return doc;
}

Json polynomials_json(const std::vector<alg::Polynomial>& polys, const alg::MonomialOrder& order,
                      const alg::VariableNamer& name) {
    Json out = Json::array();
    for (const auto& f : polys) out.push_back(f.to_string(order, name));
    return out;
}

std::string witness_name(BalancedReport::Witness w) {
    switch (w) {
        case BalancedReport::Witness::RankMismatch: return "rank_mismatch";
        case BalancedReport::Witness::GeneratorOutside: return "generator_outside";
        case BalancedReport::Witness::SharedBasis: return "shared_basis";
    }
    return "unknown";
}

}  // namespace

Json polyomino_json(const Polyomino& p) {
    Json out;
    out["cells"] = points_json(p.cells());
    out["size"] = p.size();
    out["vertex_count"] = p.vertex_count();
    out["width"] = p.width();
    out["height"] = p.height();
    out["grid"] = render_grid(p);
    return out;
}

Json classify_json(const Polyomino& p) {
    Json doc = document(p);
    doc["row_convex"] = is_row_convex(p);
    doc["column_convex"] = is_column_convex(p);
    const SimpleResult simple = is_simple(p);
    doc["simple"] = simple.simple;
    doc["hole"] = simple.hole ? point_json(*simple.hole) : Json(nullptr);
    const TreeLikeResult tree = is_tree_like(p);
    doc["tree_like"] = tree.tree_like;
    doc["leafless_subpolyomino"] = tree.tree_like ? Json(nullptr) : points_json(tree.stuck);
    const LeafCensus census = leaf_census(p);
    Json c;
    c["degree_counts"] = Json::array({census.n0, census.n1, census.n2, census.n3, census.n4});
    c["good_leaves"] = points_json(census.good_leaves);
    c["bad_leaves"] = points_json(census.bad_leaves);
    Json blocking = Json::array();
    for (auto [leaf, end] : census.blocking_cells)
        blocking.push_back({{"leaf", point_json(leaf)}, {"end_cell", point_json(end)}});
    c["blocking_cells"] = blocking;
    doc["census"] = c;
    doc["connection_graph_is_tree"] = connection_graph(p).is_tree();
    return doc;
}

Json ideal_json(const Polyomino& p) {
    Json doc = document(p);
    const auto name = vertex_namer(p);
    Json vars = Json::array();
    for (std::size_t k = 0; k < p.vertex_count(); ++k)
        vars.push_back({{"index", k}, {"vertex", point_json(p.vertices()[k])}, {"name", name(k)}});
    doc["variables"] = vars;
    Json gens = Json::array();
    for (const auto& r : inner_intervals(p))
        gens.push_back({{"lower", point_json(r.lower)},
                        {"upper", point_json(r.upper)},
                        {"minor", inner_minor(p, r).to_string(alg::MonomialOrder::canonical(p.vertex_count()), name)}});
    doc["inner_minors"] = gens;
    doc["count"] = gens.size();
    return doc;
}

Json groebner_json(const Polyomino& p, const alg::MonomialOrder& order) {
    Json doc = document(p);
    const auto start = Clock::now();
    const alg::GroebnerBasis gb = alg::buchberger(inner_minors(p), order);
    doc["order"] = order.to_string();
    doc["size"] = gb.elements.size();
    doc["basis"] = polynomials_json(gb.elements, order, vertex_namer(p));
    doc["pairs_processed"] = gb.pairs_processed;
    doc["zero_reductions"] = gb.zero_reductions;
    doc["seconds"] = since(start);
    return doc;
}

Json balanced_json(const Polyomino& p) {
    Json doc = document(p);
    const auto start = Clock::now();
    const BalancedReport r = is_balanced(p);
    doc["balanced"] = r.balanced;
    doc["witness"] = witness_name(r.witness);
    doc["admissible_rank"] = r.admissible_rank;
    doc["cell_count"] = r.cell_count;
    const auto order = alg::MonomialOrder::canonical(p.vertex_count());
    doc["outside_generator"] = r.outside_generator ? Json(r.outside_generator->to_string(order, vertex_namer(p)))
                                                   : Json(nullptr);
    doc["shared_basis_size"] = r.shared_basis.size();
    doc["seconds"] = since(start);
    return doc;
}

Json prime_json(const Polyomino& p) {
    Json doc = document(p);
    const auto start = Clock::now();
    const PrimeReport r = primality(p);
    doc["prime"] = r.prime;
    doc["ideal_basis_size"] = r.ideal_basis_size;
    doc["saturation_basis_size"] = r.saturation_basis_size;
    const auto order = alg::MonomialOrder::canonical(p.vertex_count());
    doc["witness"] = r.witness ? Json(r.witness->to_string(order, vertex_namer(p))) : Json(nullptr);
    doc["seconds"] = since(start);
    return doc;
}

Json dimension_json(const Polyomino& p) {
    Json doc = document(p);
    const auto start = Clock::now();
    doc["dimension"] = dimension(p);
    doc["vertices_minus_cells"] = p.vertex_count() - p.size();
    doc["seconds"] = since(start);
    return doc;
}

Json cycles_json(const Polyomino& p, bool primitive_only) {
    Json doc = document(p);
    const std::size_t bound = primitive_only ? primitive_cycle_bound(p) : p.vertex_count();
    const auto cycles = enumerate_cycles(p, bound, primitive_only);
    const auto order = alg::MonomialOrder::canonical(p.vertex_count());
    const auto name = vertex_namer(p);
    doc["primitive_only"] = primitive_only;
    doc["max_vertices"] = bound;
    doc["count"] = cycles.size();
    std::map<std::size_t, std::size_t> by_length;
    Json list = Json::array();
    for (const auto& c : cycles) {
        ++by_length[c.length()];
        list.push_back({{"vertices", points_json(c.vertices)}, {"binomial", cycle_binomial(p, c).to_string(order, name)}});
    }
    Json lengths = Json::object();
    for (auto [len, n] : by_length) lengths[std::to_string(len)] = n;
    doc["by_length"] = lengths;
    doc["cycles"] = list;
    return doc;
}

Json ugb_json(const Polyomino& p, std::span<const alg::MonomialOrder> orders, std::uint64_t seed) {
    Json doc = document(p);
    const auto start = Clock::now();
    const UniversalGbReport r = universal_gb_check(p, orders);
    doc["seed"] = seed;
    doc["candidate_count"] = r.candidate_count;
    doc["passed"] = r.passed();
    Json list = Json::array();
    for (const auto& o : r.outcomes)
        list.push_back({{"order", o.order},
                        {"cycles_in_ideal", o.cycles_in_ideal},
                        {"candidates_form_gb", o.candidates_form_gb},
                        {"basis_within_candidates", o.basis_within_candidates},
                        {"squarefree_initial", o.squarefree_initial},
                        {"basis_size", o.basis_size},
                        {"passed", o.passed()}});
    doc["orders"] = list;
    doc["seconds"] = since(start);
    return doc;
}

Json certificate_json(const Polyomino& p, const Certificate& cert) {
    Json doc = document(p);
    const auto order = alg::MonomialOrder::canonical(p.vertex_count());
    const auto name = vertex_namer(p);
    Json labels = Json::array();
    for (auto [pt, value] : cert.alpha.by_point(p)) labels.push_back({{"vertex", point_json(pt)}, {"value", value}});
    doc["labeling"] = labels;
    doc["target"] = cert.target.to_string(order, name);
    Json steps = Json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"sign", s.sign},
                         {"multiplier", alg::to_string(s.multiplier, name)},
                         {"minor", {{"lower", point_json(s.minor.lower)}, {"upper", point_json(s.minor.upper)}}}});
    doc["steps"] = steps;
    doc["length"] = cert.steps.size();
    doc["expands_exactly"] = expand_certificate(p, cert) == cert.target;
    return doc;
}

Json fuzz_json(const FuzzSummary& s) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["trials"] = s.trials;
    doc["max_cells"] = s.max_cells;
    doc["seed"] = s.seed;
    doc["agreements"] = s.agreements;
    doc["errors"] = s.errors;
    const auto counter = s.counterexamples();
    doc["counterexample_count"] = counter.size();
    Json results = Json::array();
    for (const auto& t : s.results) {
        Json r;
        r["index"] = t.index;
        r["seed"] = t.seed;
        r["cells"] = points_json(t.cells);
        if (t.error) {
            r["error"] = *t.error;
        } else {
            r["simple"] = t.simple;
            r["balanced"] = t.balanced;
            r["agree"] = !t.disagrees();
            r["hole"] = t.hole ? point_json(*t.hole) : Json(nullptr);
            r["witness"] = witness_name(t.witness);
            r["admissible_rank"] = t.admissible_rank;
            r["outside_generator"] = t.outside_generator ? Json(*t.outside_generator) : Json(nullptr);
        }
        r["seconds"] = t.seconds;
        results.push_back(r);
    }
    Json indices = Json::array();
    for (const auto* t : counter) indices.push_back(t->index);
    doc["counterexamples"] = indices;
    doc["results"] = results;
    doc["seconds"] = s.seconds;
    return doc;
}

Json strip_timings(Json doc) {
    if (doc.is_object()) {
        doc.erase("seconds");
        for (auto& [key, value] : doc.items()) value = strip_timings(value);
    } else if (doc.is_array()) {
        for (auto& value : doc) value = strip_timings(value);
    }
    return doc;
}

}  // namespace polyideal::cli
