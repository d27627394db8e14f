#include "polyideal/cli/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "polyideal/classify.hpp"
#include "polyideal/cli/generate.hpp"
#include "polyideal/error.hpp"

namespace polyideal::cli {

namespace {

using Clock = std::chrono::steady_clock;

void evaluate(FuzzTrial& t, std::size_t cells) {
    const auto start = Clock::now();
    try {
        const Polyomino p = random_polyomino(cells, t.seed);
        t.cells = p.cells();
        const SimpleResult simple = is_simple(p);
        t.simple = simple.simple;
        t.hole = simple.hole;
        const BalancedReport balanced = is_balanced(p);
        t.balanced = balanced.balanced;
        t.witness = balanced.witness;
        t.admissible_rank = balanced.admissible_rank;
        if (balanced.outside_generator) t.outside_generator = balanced.outside_generator->to_string(vertex_namer(p));
    } catch (const Error& e) {
        t.error = e.what();
    }
    t.seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<const FuzzTrial*> FuzzSummary::counterexamples() const {
    std::vector<const FuzzTrial*> out;
    for (const auto& t : results)
        if (t.disagrees()) out.push_back(&t);
    return out;
}

FuzzSummary fuzz_conjecture(std::size_t trials, std::size_t max_cells, std::uint64_t seed, std::size_t threads) {
    if (trials == 0 || max_cells == 0) throw Error(ErrorCode::InvalidCount, "trials and max_cells must be positive");
    const auto start = Clock::now();
    FuzzSummary summary;
    summary.trials = trials;
    summary.max_cells = max_cells;
    summary.seed = seed;
    summary.results.resize(trials);

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> sizes(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        sizes[t] = 1 + rng() % max_cells;
        summary.results[t].index = t;
        summary.results[t].seed = rng();
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < trials;) evaluate(summary.results[t], sizes[t]);
    };
    std::vector<std::jthread> pool;
    for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const auto& t : summary.results) {
        if (t.error) ++summary.errors;
        else if (!t.disagrees()) ++summary.agreements;
    }
    summary.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return summary;
}

}  // namespace polyideal::cli
