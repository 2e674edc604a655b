#include "tailmatch/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tailmatch/errors.hpp"
#include "tailmatch/numeric.hpp"
#include "tailmatch/random.hpp"

namespace tailmatch {

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
  if (k == 0) throw PreconditionError("hypergraph uniformity k must be >= 1");
}

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t k, const std::vector<Edge>& edges)
    : Hypergraph(n, k) {
  for (const auto& e : edges) add_edge(e);
}

Edge Hypergraph::normalize(Edge e) const {
  if (e.size() != k_) {
    throw PreconditionError("edge has " + std::to_string(e.size()) +
                            " vertices, expected " + std::to_string(k_));
  }
  std::sort(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1 || e[i] > n_) {
      throw PreconditionError("vertex " + std::to_string(e[i]) + " outside 1.." +
                              std::to_string(n_));
    }
    if (i > 0 && e[i] == e[i - 1]) {
      throw PreconditionError("edge repeats vertex " + std::to_string(e[i]));
    }
  }
  return e;
}

bool Hypergraph::add_edge(Edge e) {
  e = normalize(std::move(e));
  if (!index_.insert(e).second) return false;
  edges_.push_back(std::move(e));
  return true;
}

bool Hypergraph::contains(const Edge& e) const {
  Edge sorted = e;
  std::sort(sorted.begin(), sorted.end());
  return index_.count(sorted) > 0;
}

void for_each_k_subset(std::uint32_t n, std::uint32_t k,
                       const std::function<bool(const Edge&)>& visit) {
  if (k > n) return;
  Edge subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{1});
  for (;;) {
    if (!visit(subset)) return;
    // advance to the next combination in lexicographic order
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + 1 + static_cast<Vertex>(i)) --i;
    if (i < 0) return;
    ++subset[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

Hypergraph cov(std::uint32_t n, std::uint32_t k, std::uint32_t s) {
  if (k < 1 || k > n || s > n) {
    throw PreconditionError("cov requires 1 <= k <= n and 0 <= s <= n");
  }
  Hypergraph h(n, k);
  if (s == 0) return h;
  for_each_k_subset(n, k, [&](const Edge& e) {
    if (e.front() <= s) h.add_edge(e);
    return true;
  });
  return h;
}

Hypergraph clique(std::uint32_t n, std::uint32_t k, std::uint32_t t) {
  if (k < 1 || k > t || t > n) {
    throw PreconditionError("clique requires 1 <= k <= t <= n");
  }
  Hypergraph h(n, k);
  for_each_k_subset(t, k, [&](const Edge& e) {
    h.add_edge(e);
    return true;
  });
  return h;
}

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const Hypergraph& h)
      : n_(h.n()), k_(h.k()), by_min_(h.n() + 1), blocked_(h.n() + 2, 0) {
    for (const auto& e : h.edges()) by_min_[e.front()].push_back(&e);
    ceiling_ = n_ / k_;
  }

  std::uint32_t run() {
    search(1, 0);
    return best_;
  }

 private:
  bool available(const Edge& e) const {
    return std::none_of(e.begin(), e.end(), [&](Vertex v) { return blocked_[v]; });
  }

  void search(Vertex from, std::uint32_t current) {
    if (best_ == ceiling_) return;
    // Lowest vertex that still starts an available edge. Every edge through
    // an earlier undecided vertex has a smaller decided vertex, so those
    // vertices are dead from here on.
    Vertex v = from;
    for (; v <= n_; ++v) {
      if (blocked_[v]) continue;
      const auto& list = by_min_[v];
      if (std::any_of(list.begin(), list.end(), [&](const Edge* e) { return available(*e); })) break;
    }
    if (v > n_) {
      best_ = std::max(best_, current);
      return;
    }
    std::uint32_t free = 0;
    for (Vertex u = v; u <= n_; ++u) free += blocked_[u] ? 0 : 1;
    if (current + free / k_ <= best_) return;

    for (const Edge* e : by_min_[v]) {
      if (!available(*e)) continue;
      for (Vertex u : *e) blocked_[u] = 1;
      search(v + 1, current + 1);
      for (Vertex u : *e) blocked_[u] = 0;
      if (best_ == ceiling_) return;
    }
    blocked_[v] = 1;
    search(v + 1, current);
    blocked_[v] = 0;
  }

  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<std::vector<const Edge*>> by_min_;
  std::vector<char> blocked_;
  std::uint32_t ceiling_ = 0;
  std::uint32_t best_ = 0;
};

}  // namespace

std::uint32_t matching_number(const Hypergraph& h) {
  if (h.edge_count() == 0) return 0;
  return MatchingSearch(h).run();
}

Hypergraph random_hypergraph(std::uint32_t n, std::uint32_t k, std::uint64_t edge_count,
                             std::uint64_t seed) {
  if (k < 1 || k > n) throw PreconditionError("random_hypergraph requires 1 <= k <= n");
  const BigInt total = binomial(n, k);
  if (BigInt(static_cast<unsigned long>(edge_count)) > total) {
    throw PreconditionError("edge_count " + std::to_string(edge_count) + " exceeds C(" +
                            std::to_string(n) + "," + std::to_string(k) + ") = " +
                            total.get_str());
  }
  SplitMix64 rng(seed);
  std::set<Edge> chosen;
  if (total <= (1UL << 20)) {
    std::vector<Edge> all;
    for_each_k_subset(n, k, [&](const Edge& e) {
      all.push_back(e);
      return true;
    });
    for (std::uint64_t i = 0; i < edge_count; ++i) {
      const std::uint64_t j = i + rng.below(all.size() - i);
      std::swap(all[i], all[j]);
      chosen.insert(all[i]);
    }
  } else {
    while (chosen.size() < edge_count) {
      // Floyd's algorithm for a uniform k-subset of {1..n}
      std::set<Vertex> pick;
      for (std::uint32_t j = n - k + 1; j <= n; ++j) {
        const auto t = static_cast<Vertex>(1 + rng.below(j));
        if (!pick.insert(t).second) pick.insert(j);
      }
      chosen.insert(Edge(pick.begin(), pick.end()));
    }
  }
  return Hypergraph(n, k, std::vector<Edge>(chosen.begin(), chosen.end()));
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("hypergraph line " + std::to_string(line_no) + ": " + why);
  };

  if (!next_line(line)) throw ParseError("hypergraph: missing 'n k' header");
  long long n = -1;
  long long k = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> k) || (header >> extra) || n < 0 || k < 1 || n > 0xffffffffLL) {
      throw fail("expected header 'n k' with n >= 0, k >= 1");
    }
  }
  Hypergraph h(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
  while (next_line(line)) {
    std::istringstream row(line);
    Edge e;
    long long v = 0;
    while (row >> v) {
      if (v < 1 || v > n) throw fail("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      e.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof()) throw fail("non-integer token");
    try {
      h.add_edge(std::move(e));
    } catch (const PreconditionError& err) {
      throw fail(err.what());
    }
  }
  return h;
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open hypergraph file '" + path + "'");
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.k() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

}  // namespace tailmatch
