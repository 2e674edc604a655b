#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tailmatch/dist.hpp"
#include "tailmatch/hypergraph.hpp"
#include "tailmatch/rational.hpp"

namespace tailmatch {

inline constexpr std::uint64_t kDefaultSearchBudget = 5'000'000;

struct GridSpec {
  std::uint64_t value_denominator = 1;  // m: values j/m, j = 0..m
  std::uint64_t prob_denominator = 1;   // probabilities are multiples of 1/n_den
  std::uint64_t max_support = 1;
};

struct SearchReport {
  std::uint32_t k = 0;
  Rational x;
  GridSpec grid;
  Rational best_tail;
  std::optional<DiscreteDistribution> best_dist;
  Rational ceiling;               // conjectured_m(k, x)
  bool exhausted = false;         // every grid candidate was examined
  std::uint64_t candidates = 0;   // examined
  std::uint64_t feasible = 0;     // examined with mean <= x
};

/// Exhaustive maximization of the i.i.d. tail over grid distributions with
/// mean <= x. Candidates are visited in a fixed order; when the grid holds
/// more than `budget` candidates only the first `budget` are examined and the
/// report has exhausted = false. Ties go to the lexicographically smallest
/// serialized distribution, so the result does not depend on thread count.
SearchReport grid_search_mk(std::uint32_t k, const Rational& x, const GridSpec& grid,
                            std::uint64_t budget = kDefaultSearchBudget,
                            unsigned threads = 0);

/// Number of candidate distributions in the grid.
BigInt grid_size(const GridSpec& grid);

struct HuntReport {
  std::uint32_t k = 0;
  std::uint32_t s = 0;
  std::uint32_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  BigInt bound;
  std::uint64_t max_edges = 0;
  std::uint64_t best_trial = 0;
  bool exceeded = false;
  Hypergraph best{0, 1};
};

/// Random greedy densification under nu <= s, repeated `trials` times.
/// Requires n >= ks+k-1.
HuntReport counterexample_hunt(std::uint32_t k, std::uint32_t s, std::uint32_t n,
                               std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

struct Perturbation {
  std::string description;
  DiscreteDistribution dist;
  Rational tail;
};

struct WitnessProbe {
  std::string witness;
  DiscreteDistribution base;
  Rational base_tail;
  std::uint64_t checked = 0;  // feasible perturbations evaluated
  std::vector<Perturbation> improving;
};

/// Every single-atom perturbation of size 1/d of the two witnesses that keeps
/// mean <= x: shift one value by +-1/d, move 1/d of mass between two atoms, or
/// split 1/d of mass onto a new value 1/d away. Records those that raise the
/// exact tail. Witnesses not defined at x are skipped.
std::vector<WitnessProbe> witness_optimality_probe(std::uint32_t k, const Rational& x,
                                                   std::uint64_t d);

}  // namespace tailmatch
