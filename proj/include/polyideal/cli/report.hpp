#pragma once

// JSON documents printed by the command line tool. Every document carries
// "schema": 1; fields named "seconds" are the only nondeterministic ones.

#include <cstdint>
#include <span>

#include <json.hpp>

#include "polyideal/certificate.hpp"
#include "polyideal/cli/fuzz.hpp"
#include "polyideal/cycles.hpp"
#include "polyideal/grid.hpp"

namespace polyideal::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json polyomino_json(const Polyomino& p);
Json classify_json(const Polyomino& p);
Json ideal_json(const Polyomino& p);
Json groebner_json(const Polyomino& p, const alg::MonomialOrder& order);
Json balanced_json(const Polyomino& p);
Json prime_json(const Polyomino& p);
Json dimension_json(const Polyomino& p);
Json cycles_json(const Polyomino& p, bool primitive_only);
Json ugb_json(const Polyomino& p, std::span<const alg::MonomialOrder> orders, std::uint64_t seed);
Json certificate_json(const Polyomino& p, const Certificate& cert);
Json fuzz_json(const FuzzSummary& summary);

// Recursively drops every "seconds" member.
Json strip_timings(Json doc);

}  // namespace polyideal::cli
