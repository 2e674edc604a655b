#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tailmatch/dist.hpp"
#include "tailmatch/hypergraph.hpp"
#include "tailmatch/rational.hpp"

namespace tailmatch {

/// Default ceiling on C(nr, k) for exhaustive edge enumeration.
inline constexpr std::uint64_t kDefaultBridgeEnumCap = 2'000'000;

/// Hypergraph encoding of a rational distribution.
///
/// Vertices 1..nr carry weights; value a_j of the source appears n * r * p_j
/// times (r is the lcm of the probability denominators), atoms laid out in
/// ascending value order. Edges are exactly the k-sets whose weights sum to
/// at least 1, so `weights` is a fractional cover of `hypergraph`.
struct BridgeInstance {
  DiscreteDistribution source{{{Rational(0), Rational(1)}}};
  std::uint32_t k = 0;
  std::uint64_t r = 0;
  std::uint64_t n = 0;
  Hypergraph hypergraph{0, 1};
  std::vector<Rational> weights;  // weights[v-1] for vertex v

  Rational weight_total() const;
};

BridgeInstance dist_to_hypergraph(const DiscreteDistribution& d, std::uint32_t k,
                                  std::uint64_t n,
                                  std::uint64_t enum_cap = kDefaultBridgeEnumCap);

enum class RepeatCountMethod { kPatternCount, kComplement };

struct TailIdentity {
  Rational lhs;    // iid tail of the source
  Rational rhs;    // (k! |E| + N) / (nr)^k
  BigInt repeated; // N: favorable k-tuples with a repeated vertex
  RepeatCountMethod method = RepeatCountMethod::kPatternCount;
};

/// Counts the favorable vertex tuples two ways and checks they agree with the
/// iid tail exactly; throws ConsistencyError otherwise. N is counted from atom
/// multiplicities when (nr)^k <= pattern_limit, otherwise by complement from
/// the tail and |E|.
TailIdentity tail_identity_check(const BridgeInstance& b, std::uint32_t k,
                                 std::uint64_t pattern_limit = 10'000'000);

struct TailBound {
  Rational density_term;  // k! |E| / n^k
  Rational tail;          // iid tail of the empirical cover-weight distribution
  Rational cover_mean;    // tau* / n
  DiscreteDistribution empirical{{{Rational(0), Rational(1)}}};
};

/// Pulls an optimal fractional cover back to a distribution (uniform random
/// vertex) and checks density_term <= tail exactly; throws ConsistencyError
/// otherwise.
TailBound hypergraph_to_tail_bound(const Hypergraph& h, std::uint32_t k);

enum class Family { kCov, kClique };

std::string to_string(Family family);
Family parse_family(const std::string& name);

struct DensityRow {
  std::uint32_t n = 0;
  std::uint32_t parameter = 0;  // s for cov, t for clique
  BigInt edges;
  Rational density;             // |E| / C(n,k)
  Rational limit;
  Rational gap;                 // density - limit
  Rational cover_size;          // size of the explicit cover
  bool cover_ok = false;        // explicit cover feasible and of size <= xn
  bool built = false;           // edge set enumerated (not only counted)
};

/// For each n: cov(n,k,floor(xn)) or clique(n,k,floor(kxn)), with the exact
/// density, the conjectured limit and the explicit cover check. Hypergraphs
/// with more than enum_cap potential edges are counted, not enumerated.
std::vector<DensityRow> density_convergence_probe(Family family, std::uint32_t k,
                                                  const Rational& x,
                                                  const std::vector<std::uint32_t>& n_list,
                                                  std::uint64_t enum_cap = kDefaultBridgeEnumCap);

}  // namespace tailmatch
