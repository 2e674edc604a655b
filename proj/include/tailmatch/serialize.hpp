#pragma once

#include <string>

#include <json.hpp>

#include "tailmatch/bridge.hpp"
#include "tailmatch/dist.hpp"
#include "tailmatch/lp.hpp"
#include "tailmatch/search.hpp"

namespace tailmatch {

using Json = nlohmann::ordered_json;

/// {role, size, weights: {index: "p/q"}}
Json to_json(const WeightFunction& w);

/// [["value","prob"], ...]
Json to_json(const DiscreteDistribution& d);

/// Accepts the array form above; throws ParseError on malformed input and
/// PreconditionError when the atoms do not form a distribution.
DiscreteDistribution distribution_from_json(const Json& j);
DiscreteDistribution parse_distribution(const std::string& text);

/// {k, x, grid: {m, n_den, max_support}, best_tail, ceiling, best_dist, exhausted, ...}
Json to_json(const SearchReport& r);

/// Sidecar for a bridge instance: {k, r, n, weights: [...], source: [...]}.
Json sidecar_json(const BridgeInstance& b);

}  // namespace tailmatch
