#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "tailmatch/hypergraph.hpp"
#include "tailmatch/rational.hpp"

namespace tailmatch {

enum class WeightRole { kFractionalMatching, kFractionalCover };

std::string to_string(WeightRole role);

// Weights on edges (matching, keyed by 0-based edge index in input order) or
// on vertices (cover, keyed by 1-based vertex number). Zero weights are not
// stored.
struct WeightFunction {
  WeightRole role = WeightRole::kFractionalMatching;
  std::map<std::size_t, Rational> carrier;
  Rational size;

  Rational at(std::size_t index) const;

  /// Checks values in [0,1], size equal to the carrier sum, indices in range,
  /// and the role's packing or covering constraints against h.
  bool is_feasible(const Hypergraph& h) const;
};

struct FractionalSolution {
  Rational value;
  WeightFunction witness;
};

/// nu*(h): maximum fractional matching, solved by primal simplex from the
/// all-slack basis.
FractionalSolution fractional_matching(const Hypergraph& h);

/// tau*(h): minimum fractional vertex cover, solved by dual simplex on the
/// covering LP. Shares no state with fractional_matching.
FractionalSolution fractional_cover(const Hypergraph& h);

struct DualityReport {
  Rational nu_star;
  Rational tau_star;
  WeightFunction matching;
  WeightFunction cover;
  bool matching_feasible = false;
  bool cover_feasible = false;
  bool equal = false;
};

/// Solves both LPs and checks nu* == tau* with feasible witnesses.
/// Throws ConsistencyError when any of those fails.
DualityReport verify_duality(const Hypergraph& h);

}  // namespace tailmatch
