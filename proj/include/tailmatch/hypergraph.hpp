#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace tailmatch {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// k-uniform hypergraph on vertices 1..n.
///
/// Edges are stored sorted ascending and deduplicated; the first occurrence of
/// an edge fixes its index, so edge indices follow input order. Isolated
/// vertices are legal and count towards n.
class Hypergraph {
 public:
  Hypergraph(std::uint32_t n, std::uint32_t k);
  Hypergraph(std::uint32_t n, std::uint32_t k, const std::vector<Edge>& edges);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Returns false (and leaves the graph unchanged) when the edge exists.
  /// Throws PreconditionError on a malformed edge.
  bool add_edge(Edge e);
  bool contains(const Edge& e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Edge normalize(Edge e) const;

  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<Edge> edges_;
  std::set<Edge> index_;
};

/// Calls visit(subset) for every k-subset of {1..n} in lexicographic order.
/// Returning false from visit stops the scan.
void for_each_k_subset(std::uint32_t n, std::uint32_t k,
                       const std::function<bool(const Edge&)>& visit);

/// Cov_{n,k}(s): all k-sets meeting S = {1..s}.
Hypergraph cov(std::uint32_t n, std::uint32_t k, std::uint32_t s);

/// Cl_{n,k}(t): all k-subsets of T = {1..t}.
Hypergraph clique(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// Exact matching number by branch and bound.
std::uint32_t matching_number(const Hypergraph& h);

/// Uniformly random set of `edge_count` distinct edges, reproducible per seed.
Hypergraph random_hypergraph(std::uint32_t n, std::uint32_t k,
                             std::uint64_t edge_count, std::uint64_t seed);

// Text format: "n k" header, then one edge per line; '#' starts a comment line.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace tailmatch
