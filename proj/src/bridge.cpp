#include "tailmatch/bridge.hpp"

#include <functional>
#include <limits>

#include "tailmatch/errors.hpp"
#include "tailmatch/lp.hpp"
#include "tailmatch/numeric.hpp"

namespace tailmatch {

Rational BridgeInstance::weight_total() const {
  Rational total;
  for (const auto& w : weights) total += w;
  return total;
}

namespace {

// Edge test sum >= 1 over a common denominator, in 64-bit when it fits.
class WeightSumTest {
 public:
  WeightSumTest(const std::vector<Rational>& weights, std::uint32_t k) : weights_(weights) {
    BigInt common = 1;
    for (const auto& w : weights) common = lcm(common, w.denominator());
    const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 2);
    if (common * (k + 1) < limit) {
      fast_ = true;
      unit_ = common.get_si();
      for (const auto& w : weights) {
        scaled_.push_back(BigInt(w.numerator() * (common / w.denominator())).get_si());
      }
    }
  }

  bool reaches_one(const Edge& e) const {
    if (fast_) {
      std::int64_t s = 0;
      for (Vertex v : e) s += scaled_[v - 1];
      return s >= unit_;
    }
    Rational s;
    for (Vertex v : e) s += weights_[v - 1];
    return s >= Rational(1);
  }

 private:
  const std::vector<Rational>& weights_;
  bool fast_ = false;
  std::int64_t unit_ = 1;
  std::vector<std::int64_t> scaled_;
};

}  // namespace

BridgeInstance dist_to_hypergraph(const DiscreteDistribution& d, std::uint32_t k,
                                  std::uint64_t n, std::uint64_t enum_cap) {
  if (k < 1) throw PreconditionError("bridge requires k >= 1");
  if (n < 1) throw PreconditionError("bridge requires n >= 1");
  BigInt r = 1;
  for (const auto& a : d.atoms()) r = lcm(r, a.prob.denominator());
  const BigInt vertices = r * static_cast<unsigned long>(n);
  if (vertices > BigInt(std::numeric_limits<std::uint32_t>::max())) {
    throw SizeError("bridge: nr = " + vertices.get_str() + " vertices is too many");
  }
  const auto nr = static_cast<std::uint32_t>(vertices.get_ui());
  const BigInt subsets = binomial(nr, k);
  if (subsets > BigInt(static_cast<unsigned long>(enum_cap))) {
    throw SizeError("bridge: C(" + std::to_string(nr) + "," + std::to_string(k) + ") = " +
                    subsets.get_str() + " k-subsets exceeds the enumeration cap " +
                    std::to_string(enum_cap));
  }

  BridgeInstance b{d, k, r.get_ui(), n, Hypergraph(nr, k), {}};
  b.weights.reserve(nr);
  for (const auto& a : d.atoms()) {
    // n * p'_j with p'_j = r p_j
    const BigInt copies = BigInt(a.prob.numerator() * (r / a.prob.denominator())) *
                          static_cast<unsigned long>(n);
    for (BigInt i = 0; i < copies; ++i) b.weights.push_back(a.value);
  }
  if (b.weights.size() != nr) throw ConsistencyError("bridge: weight multiset size != nr");

  const WeightSumTest test(b.weights, k);
  for_each_k_subset(nr, k, [&](const Edge& e) {
    if (test.reaches_one(e)) b.hypergraph.add_edge(e);
    return true;
  });
  return b;
}

namespace {

// N by atom label patterns: for each label tuple whose values reach 1, all
// vertex tuples with those labels minus the injective ones.
struct PatternCounts {
  BigInt repeated;
  BigInt injective;
};

PatternCounts count_by_patterns(const DiscreteDistribution& d, std::uint64_t n,
                                std::uint64_t r, std::uint32_t k) {
  const auto& atoms = d.atoms();
  std::vector<std::uint64_t> copies;
  for (const auto& a : atoms) {
    copies.push_back(BigInt(a.prob.numerator() * (BigInt(static_cast<unsigned long>(r)) /
                                                  a.prob.denominator()) *
                            static_cast<unsigned long>(n))
                         .get_ui());
  }
  PatternCounts out;
  std::vector<std::uint32_t> multiplicity(atoms.size(), 0);
  std::vector<std::size_t> labels(k, 0);
  const std::function<void(std::uint32_t, const Rational&)> walk =
      [&](std::uint32_t pos, const Rational& sum) {
        if (pos == k) {
          if (sum < Rational(1)) return;
          BigInt all = 1;
          BigInt injective = 1;
          for (std::size_t j = 0; j < atoms.size(); ++j) {
            if (multiplicity[j] == 0) continue;
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), copies[j], multiplicity[j]);
            all *= p;
            injective *= falling_factorial(copies[j], multiplicity[j]);
          }
          out.repeated += all - injective;
          out.injective += injective;
          return;
        }
        for (std::size_t j = 0; j < atoms.size(); ++j) {
          ++multiplicity[j];
          walk(pos + 1, sum + atoms[j].value);
          --multiplicity[j];
        }
      };
  walk(0, Rational(0));
  return out;
}

}  // namespace

TailIdentity tail_identity_check(const BridgeInstance& b, std::uint32_t k,
                                 std::uint64_t pattern_limit) {
  if (k != b.k) throw PreconditionError("tail_identity_check: instance built for another k");
  const std::uint64_t nr = b.n * b.r;
  BigInt tuples;
  mpz_ui_pow_ui(tuples.get_mpz_t(), nr, k);

  TailIdentity out;
  out.lhs = iid_tail(b.source, k);
  const BigInt ordered_edges = factorial(k) * static_cast<unsigned long>(b.hypergraph.edge_count());

  if (tuples <= BigInt(static_cast<unsigned long>(pattern_limit))) {
    out.method = RepeatCountMethod::kPatternCount;
    const auto counts = count_by_patterns(b.source, b.n, b.r, k);
    if (counts.injective != ordered_edges) {
      throw ConsistencyError("bridge: injective favorable tuples " + counts.injective.get_str() +
                             " != k!|E| = " + ordered_edges.get_str());
    }
    out.repeated = counts.repeated;
  } else {
    out.method = RepeatCountMethod::kComplement;
    const Rational favorable = out.lhs * Rational(tuples);
    if (!favorable.is_integer()) {
      throw ConsistencyError("bridge: tail * (nr)^k = " + favorable.str() + " is not an integer");
    }
    out.repeated = favorable.numerator() - ordered_edges;
    if (out.repeated < 0) throw ConsistencyError("bridge: negative repeated-tuple count");
  }

  out.rhs = Rational(ordered_edges + out.repeated, tuples);
  if (out.lhs != out.rhs) {
    throw ConsistencyError("bridge identity failed: tail " + out.lhs.str() +
                           " != (k!|E|+N)/(nr)^k = " + out.rhs.str());
  }
  return out;
}

TailBound hypergraph_to_tail_bound(const Hypergraph& h, std::uint32_t k) {
  if (h.k() != k) throw PreconditionError("hypergraph_to_tail_bound: uniformity is not k");
  if (h.n() == 0) throw PreconditionError("hypergraph_to_tail_bound: no vertices");
  const auto cover = fractional_cover(h);
  const Rational per_vertex = Rational(1) / Rational(h.n());
  std::vector<Atom> atoms;
  for (Vertex v = 1; v <= h.n(); ++v) atoms.push_back({cover.witness.at(v), per_vertex});

  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), h.n(), k);
  TailBound out{Rational(factorial(k) * static_cast<unsigned long>(h.edge_count()), power),
                Rational(0), cover.value / Rational(h.n()), DiscreteDistribution(std::move(atoms))};
  out.tail = iid_tail(out.empirical, k);
  if (out.density_term > out.tail) {
    throw ConsistencyError("forward bound failed: k!|E|/n^k = " + out.density_term.str() +
                           " > tail " + out.tail.str());
  }
  return out;
}

std::string to_string(Family family) { return family == Family::kCov ? "cov" : "clique"; }

Family parse_family(const std::string& name) {
  if (name == "cov") return Family::kCov;
  if (name == "clique") return Family::kClique;
  throw ParseError("unknown family '" + name + "' (expected cov or clique)");
}

std::vector<DensityRow> density_convergence_probe(Family family, std::uint32_t k,
                                                  const Rational& x,
                                                  const std::vector<std::uint32_t>& n_list,
                                                  std::uint64_t enum_cap) {
  if (k < 1) throw PreconditionError("density probe requires k >= 1");
  if (x.sign() < 0 || Rational(k) * x > Rational(1)) {
    throw PreconditionError("density probe requires 0 <= x <= 1/k");
  }
  const Rational limit = family == Family::kCov ? Rational(1) - (Rational(1) - x).pow(k)
                                                : (Rational(k) * x).pow(k);
  std::vector<DensityRow> rows;
  for (std::uint32_t n : n_list) {
    if (n < k) throw PreconditionError("density probe requires n >= k");
    DensityRow row;
    row.n = n;
    const Rational xn = x * Rational(n);
    std::vector<Rational> cover(n + 1);
    if (family == Family::kCov) {
      row.parameter = static_cast<std::uint32_t>(xn.floor().get_ui());
      row.edges = binomial(n, k) - binomial(n - row.parameter, k);
      for (Vertex v = 1; v <= row.parameter; ++v) cover[v] = 1;
    } else {
      row.parameter = static_cast<std::uint32_t>((Rational(k) * xn).floor().get_ui());
      row.edges = binomial(row.parameter, k);
      for (Vertex v = 1; v <= row.parameter; ++v) cover[v] = Rational(1) / Rational(k);
    }
    for (Vertex v = 1; v <= n; ++v) row.cover_size += cover[v];

    bool feasible = true;
    if (binomial(n, k) <= BigInt(static_cast<unsigned long>(enum_cap))) {
      Hypergraph h(n, k);
      if (family == Family::kCov) {
        h = cov(n, k, row.parameter);
      } else if (row.parameter >= k) {
        h = clique(n, k, row.parameter);
      }
      if (BigInt(static_cast<unsigned long>(h.edge_count())) != row.edges) {
        throw ConsistencyError("density probe: built edge count disagrees with binomials");
      }
      for (const auto& e : h.edges()) {
        Rational s;
        for (Vertex v : e) s += cover[v];
        if (s < Rational(1)) {
          feasible = false;
          break;
        }
      }
      row.built = true;
    }
    row.cover_ok = feasible && row.cover_size <= xn;
    row.density = Rational(row.edges, binomial(n, k));
    row.limit = limit;
    row.gap = row.density - limit;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tailmatch
