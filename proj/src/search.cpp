#include "tailmatch/search.hpp"

#include <algorithm>
#include <functional>

#include "parallel.hpp"
#include "tailmatch/errors.hpp"
#include "tailmatch/formulas.hpp"
#include "tailmatch/numeric.hpp"
#include "tailmatch/random.hpp"

namespace tailmatch {

BigInt grid_size(const GridSpec& grid) {
  BigInt total = 0;
  for (std::uint64_t s = 1; s <= grid.max_support; ++s) {
    total += binomial(grid.value_denominator + 1, s) * binomial(grid.prob_denominator - 1, s - 1);
  }
  return total;
}

namespace {

struct Candidate {
  Rational tail;
  std::string key;
  std::optional<DiscreteDistribution> dist;

  bool beats(const Candidate& other) const {
    if (!other.dist) return dist.has_value();
    if (!dist) return false;
    if (tail != other.tail) return tail > other.tail;
    return key < other.key;
  }
};

struct SupportUnit {
  std::vector<std::uint64_t> values;  // grid indices j, value j/m
  std::uint64_t allowance = 0;        // candidates of this unit inside the budget
};

// Supports in (size, lexicographic) order until the budget is used up.
std::vector<SupportUnit> plan_supports(const GridSpec& grid, std::uint64_t budget) {
  std::vector<SupportUnit> units;
  std::uint64_t used = 0;
  for (std::uint64_t s = 1; s <= grid.max_support && used < budget; ++s) {
    const BigInt per_support = binomial(grid.prob_denominator - 1, s - 1);
    if (per_support == 0) continue;
    std::vector<std::uint64_t> combo(s);
    for (std::uint64_t i = 0; i < s; ++i) combo[i] = i;
    for (;;) {
      if (used >= budget) break;
      const BigInt left = BigInt(static_cast<unsigned long>(budget - used));
      const std::uint64_t take = (per_support < left ? per_support : left).get_ui();
      units.push_back({combo, take});
      used += take;
      std::int64_t i = static_cast<std::int64_t>(s) - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] ==
                           grid.value_denominator - s + 1 + static_cast<std::uint64_t>(i)) {
        --i;
      }
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return units;
}

}  // namespace

SearchReport grid_search_mk(std::uint32_t k, const Rational& x, const GridSpec& grid,
                            std::uint64_t budget, unsigned threads) {
  if (k < 1) throw PreconditionError("grid_search_mk requires k >= 1");
  if (x.sign() < 0) throw PreconditionError("grid_search_mk requires x >= 0");
  if (grid.value_denominator < 1 || grid.prob_denominator < 1) {
    throw PreconditionError("grid_search_mk requires m >= 1 and n_den >= 1");
  }
  if (grid.max_support < 1 || grid.max_support > grid.value_denominator + 1) {
    throw PreconditionError("grid_search_mk requires 1 <= max_support <= m+1");
  }

  SearchReport report;
  report.k = k;
  report.x = x;
  report.grid = grid;
  report.ceiling = conjectured_m(k, x).value;

  const auto units = plan_supports(grid, budget);
  const Rational m(grid.value_denominator);
  const Rational nden(grid.prob_denominator);
  // mean <= x  <=>  sum_i j_i c_i <= x m n_den
  const BigInt mean_cap = (x * m * nden).floor();

  struct WorkerState {
    Candidate best;
    std::uint64_t examined = 0;
    std::uint64_t feasible = 0;
  };
  const unsigned workers = detail::resolve_threads(threads, units.size());
  std::vector<WorkerState> states(workers);

  detail::parallel_for(units.size(), workers, [&](unsigned w, std::size_t u) {
    const SupportUnit& unit = units[u];
    auto& state = states[w];
    const std::size_t s = unit.values.size();
    std::vector<std::uint64_t> parts(s, 1);
    std::uint64_t remaining = unit.allowance;

    const std::function<void(std::size_t, std::uint64_t)> place =
        [&](std::size_t pos, std::uint64_t left) {
          if (remaining == 0) return;
          if (pos + 1 == s) {
            parts[pos] = left;
            --remaining;
            ++state.examined;
            BigInt weighted = 0;
            for (std::size_t i = 0; i < s; ++i) {
              weighted += BigInt(static_cast<unsigned long>(unit.values[i])) *
                          static_cast<unsigned long>(parts[i]);
            }
            if (weighted > mean_cap) return;
            ++state.feasible;
            std::vector<Atom> atoms;
            for (std::size_t i = 0; i < s; ++i) {
              atoms.push_back({Rational(unit.values[i]) / m, Rational(parts[i]) / nden});
            }
            Candidate c;
            c.dist.emplace(std::move(atoms));
            c.tail = iid_tail(*c.dist, k);
            if (c.tail < state.best.tail && state.best.dist) return;
            c.key = c.dist->serialize();
            if (c.beats(state.best)) state.best = std::move(c);
            return;
          }
          const std::uint64_t slots_after = s - pos - 1;
          for (std::uint64_t c = 1; c + slots_after <= left && remaining > 0; ++c) {
            parts[pos] = c;
            place(pos + 1, left - c);
          }
        };
    place(0, grid.prob_denominator);
  });

  Candidate best;
  for (auto& st : states) {
    report.candidates += st.examined;
    report.feasible += st.feasible;
    if (st.best.beats(best)) best = std::move(st.best);
  }
  report.best_tail = best.tail;
  report.best_dist = std::move(best.dist);
  report.exhausted = BigInt(static_cast<unsigned long>(report.candidates)) == grid_size(grid);
  return report;
}

namespace {

struct TrialResult {
  std::uint64_t edges = 0;
  Hypergraph graph{0, 1};
};

TrialResult densify(std::uint32_t k, std::uint32_t s, std::uint32_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> order;
  for_each_k_subset(n, k, [&](const Edge& e) {
    order.push_back(e);
    return true;
  });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    std::swap(order[i], order[i + rng.below(order.size() - i)]);
  }

  Hypergraph h(n, k);
  std::uint32_t nu = 0;
  for (const auto& e : order) {
    // nu(H + e) = max(nu(H), 1 + nu(edges of H disjoint from e))
    Hypergraph rest(n, k);
    for (const auto& f : h.edges()) {
      const bool disjoint = std::none_of(f.begin(), f.end(), [&](Vertex v) {
        return std::binary_search(e.begin(), e.end(), v);
      });
      if (disjoint) rest.add_edge(f);
    }
    const std::uint32_t with_e = std::max(nu, matching_number(rest) + 1);
    if (with_e > s) continue;
    h.add_edge(e);
    nu = with_e;
  }
  if (matching_number(h) != nu) throw ConsistencyError("hunt: incremental nu disagrees with recount");
  return {h.edge_count(), std::move(h)};
}

}  // namespace

HuntReport counterexample_hunt(std::uint32_t k, std::uint32_t s, std::uint32_t n,
                               std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  HuntReport report;
  report.bound = erdos_bound(n, k, s);  // validates n >= ks+k-1
  report.k = k;
  report.s = s;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.best = Hypergraph(n, k);

  std::vector<TrialResult> results(trials);
  detail::parallel_for(trials, threads, [&](unsigned, std::size_t t) {
    results[t] = densify(k, s, n, derive_seed(seed, t));
  });
  for (std::size_t t = 0; t < results.size(); ++t) {
    if (t == 0 || results[t].edges > report.max_edges) {
      report.max_edges = results[t].edges;
      report.best_trial = t;
      report.best = results[t].graph;
    }
  }
  report.exceeded = BigInt(static_cast<unsigned long>(report.max_edges)) > report.bound;
  return report;
}

namespace {

std::vector<Perturbation> perturbations_of(const DiscreteDistribution& base, const Rational& step) {
  std::vector<Perturbation> out;
  const auto& atoms = base.atoms();
  const Rational one(1);
  auto emit = [&](std::string description, std::vector<Atom> atoms_out) {
    out.push_back({std::move(description), DiscreteDistribution(std::move(atoms_out)), Rational(0)});
  };
  auto has_value = [&](const Rational& v) {
    return std::any_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.value == v; });
  };

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (int dir : {-1, 1}) {
      const Rational moved = atoms[i].value + Rational(dir) * step;
      if (moved.sign() < 0 || moved > one) continue;
      auto shifted = atoms;
      shifted[i].value = moved;
      emit("shift value " + atoms[i].value.str() + " -> " + moved.str(), std::move(shifted));

      if (atoms[i].prob < step || has_value(moved)) continue;
      auto split = atoms;
      split[i].prob -= step;
      split.push_back({moved, step});
      emit("split " + step.str() + " from " + atoms[i].value.str() + " onto " + moved.str(),
           std::move(split));
    }
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (j == i || atoms[i].prob < step) continue;
      auto transfer = atoms;
      transfer[i].prob -= step;
      transfer[j].prob += step;
      emit("move " + step.str() + " from " + atoms[i].value.str() + " to " + atoms[j].value.str(),
           std::move(transfer));
    }
  }
  return out;
}

}  // namespace

std::vector<WitnessProbe> witness_optimality_probe(std::uint32_t k, const Rational& x,
                                                   std::uint64_t d) {
  if (k < 1) throw PreconditionError("witness probe requires k >= 1");
  if (d < 2) throw PreconditionError("witness probe requires d >= 2");
  if (x.sign() < 0) throw PreconditionError("witness probe requires x >= 0");
  const Rational step = Rational(1) / Rational(d);

  std::vector<std::pair<std::string, DiscreteDistribution>> witnesses;
  if (x <= Rational(1)) witnesses.emplace_back("two_point_one", two_point_one(x));
  if (Rational(k) * x <= Rational(1)) witnesses.emplace_back("two_point_inv_k", two_point_inv_k(k, x));

  std::vector<WitnessProbe> probes;
  for (auto& [name, base] : witnesses) {
    WitnessProbe probe{name, base, iid_tail(base, k), 0, {}};
    for (auto& p : perturbations_of(base, step)) {
      if (p.dist.mean() > x) continue;
      ++probe.checked;
      p.tail = iid_tail(p.dist, k);
      if (p.tail > probe.base_tail) probe.improving.push_back(std::move(p));
    }
    probes.push_back(std::move(probe));
  }
  return probes;
}

}  // namespace tailmatch
