#include <doctest.h>

#include <optional>

#include "oracles.hpp"
#include "tailmatch/errors.hpp"
#include "tailmatch/formulas.hpp"
#include "tailmatch/search.hpp"

using namespace tailmatch;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

struct BruteBest {
  Rational tail;
  std::string key;
};

// Every probability vector over all m+1 grid values (zeros allowed), filtered
// by support size and mean, tail by tuple enumeration.
BruteBest brute_grid(std::uint32_t k, const Rational& x, std::uint64_t m, std::uint64_t nden,
                     std::uint64_t max_support) {
  std::optional<BruteBest> best;
  std::vector<std::uint64_t> counts(m + 1, 0);
  const std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t left) {
    if (pos == m) {
      counts[pos] = left;
      std::vector<Atom> atoms;
      for (std::size_t j = 0; j <= m; ++j) {
        if (counts[j]) atoms.push_back({Rational(j) / Rational(m), Rational(counts[j]) / Rational(nden)});
      }
      if (atoms.size() > max_support) return;
      const DiscreteDistribution d(atoms);
      if (d.mean() > x) return;
      const Rational t = oracle::tail_by_enumeration(d.atoms(), k);
      const std::string key = d.serialize();
      if (!best || t > best->tail || (t == best->tail && key < best->key)) best = BruteBest{t, key};
      return;
    }
    for (std::uint64_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      rec(pos + 1, left - c);
    }
  };
  rec(0, nden);
  return *best;
}

}  // namespace

TEST_CASE("grid search examples") {
  const auto a = grid_search_mk(2, q("2/5"), {2, 5, 2});
  CHECK(a.best_tail == q("16/25"));
  REQUIRE(a.best_dist);
  CHECK(a.best_dist->serialize() == R"([["0","1/5"],["1/2","4/5"]])");
  CHECK(a.exhausted);
  CHECK(a.ceiling == q("16/25"));

  const auto b = grid_search_mk(3, q("1/4"), {3, 4, 2});
  CHECK(b.best_tail == q("37/64"));
  CHECK(b.best_dist->serialize() == R"([["0","3/4"],["1","1/4"]])");

  for (std::uint64_t m : {1, 2, 4}) {
    const auto c = grid_search_mk(1, q("1/2"), {m, 2, 2});
    CHECK(c.best_tail == q("1/2"));
  }
}

TEST_CASE("grid search matches brute force") {
  struct Case {
    std::uint32_t k;
    const char* x;
    std::uint64_t m, nden, support;
  };
  for (const Case& c : {Case{2, "2/5", 2, 5, 2}, Case{3, "1/4", 3, 4, 2}, Case{2, "1/3", 3, 6, 3},
                        Case{3, "1/5", 4, 5, 3}, Case{4, "1/8", 4, 4, 4}, Case{2, "7/10", 5, 3, 2}}) {
    const auto expected = brute_grid(c.k, q(c.x), c.m, c.nden, c.support);
    const auto got = grid_search_mk(c.k, q(c.x), {c.m, c.nden, c.support});
    CHECK(got.best_tail == expected.tail);
    CHECK(got.best_dist->serialize() == expected.key);
    CHECK(got.best_dist->mean() <= q(c.x));
    CHECK(iid_tail(*got.best_dist, c.k) == got.best_tail);
    CHECK(BigInt(static_cast<unsigned long>(got.candidates)) == grid_size({c.m, c.nden, c.support}));
  }
}

TEST_CASE("grid search stays below the proven ceiling for k = 3") {
  for (long j = 0; j <= 12; ++j) {
    const Rational x{BigInt(j), BigInt(36)};
    const auto r = grid_search_mk(3, x, {4, 6, 3});
    CHECK(r.best_tail <= conjectured_m(3, x).value);
  }
}

TEST_CASE("grid search reaches representable witnesses") {
  // x = 1/4, m = 4, n_den = 8: {0:3/4, 1:1/4} lies on the grid
  const auto r = grid_search_mk(3, q("1/4"), {4, 8, 3});
  CHECK(r.best_tail >= iid_tail(two_point_one(q("1/4")), 3));
  CHECK(r.best_tail == r.ceiling);
  // x = 1/6, k = 2: {0:2/3, 1/2:1/3} lies on the grid m=2, n_den=3
  const auto s = grid_search_mk(2, q("1/6"), {2, 3, 2});
  CHECK(s.best_tail >= iid_tail(two_point_inv_k(2, q("1/6")), 2));
}

TEST_CASE("grid search budget yields a partial, flagged report") {
  const GridSpec grid{4, 8, 3};
  const auto full = grid_search_mk(3, q("1/5"), grid);
  CHECK(full.exhausted);
  const auto partial = grid_search_mk(3, q("1/5"), grid, 50);
  CHECK_FALSE(partial.exhausted);
  CHECK(partial.candidates == 50);
  CHECK(partial.best_tail <= full.best_tail);
}

TEST_CASE("grid search is independent of thread count") {
  const GridSpec grid{6, 6, 3};
  const auto one = grid_search_mk(3, q("3/10"), grid, kDefaultSearchBudget, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto many = grid_search_mk(3, q("3/10"), grid, kDefaultSearchBudget, threads);
    CHECK(many.best_tail == one.best_tail);
    CHECK(many.best_dist->serialize() == one.best_dist->serialize());
    CHECK(many.candidates == one.candidates);
    CHECK(many.feasible == one.feasible);
  }
}

TEST_CASE("grid search preconditions") {
  CHECK_THROWS_AS(grid_search_mk(3, q("1/5"), {2, 4, 4}), PreconditionError);
  CHECK_THROWS_AS(grid_search_mk(3, q("1/5"), {0, 4, 1}), PreconditionError);
  CHECK_THROWS_AS(grid_search_mk(0, q("1/5"), {2, 4, 1}), PreconditionError);
}

TEST_CASE("counterexample hunt examples") {
  const auto a = counterexample_hunt(2, 1, 5, 200, 1);
  CHECK(a.bound == 4);
  CHECK(a.max_edges <= 4);
  CHECK_FALSE(a.exceeded);
  CHECK(matching_number(a.best) <= 1);

  const auto b = counterexample_hunt(3, 1, 8, 200, 2);
  CHECK(b.bound == 21);
  CHECK(b.max_edges <= 21);

  const auto c = counterexample_hunt(3, 2, 9, 100, 3);
  CHECK(c.bound == 56);
  CHECK(c.max_edges <= 56);
  CHECK(matching_number(c.best) <= 2);

  CHECK_THROWS_AS(counterexample_hunt(3, 2, 7, 10, 0), PreconditionError);
}

TEST_CASE("hunt is deterministic per seed and thread count independent") {
  const auto one = counterexample_hunt(3, 2, 9, 40, 77, 1);
  const auto again = counterexample_hunt(3, 2, 9, 40, 77, 4);
  CHECK(one.max_edges == again.max_edges);
  CHECK(one.best_trial == again.best_trial);
  CHECK(one.best == again.best);
}

TEST_CASE("hunt densification produces maximal graphs") {
  // every rejected edge must raise nu above s
  const auto r = counterexample_hunt(2, 2, 7, 5, 9);
  const auto& h = r.best;
  CHECK(matching_number(h) == 2);
  for_each_k_subset(7, 2, [&](const Edge& e) {
    if (!h.contains(e)) {
      Hypergraph bigger = h;
      bigger.add_edge(e);
      CHECK(matching_number(bigger) == 3);
    }
    return true;
  });
}

TEST_CASE("witness optimality probe examples") {
  for (const auto& [k, x, d, name] :
       {std::tuple{3u, "1/10", 100ull, "two_point_one"}, std::tuple{3u, "3/10", 100ull, "two_point_inv_k"},
        std::tuple{2u, "1/5", 10ull, "two_point_one"}}) {
    const auto probes = witness_optimality_probe(k, q(x), d);
    bool seen = false;
    for (const auto& p : probes) {
      if (p.witness != name) continue;
      seen = true;
      CHECK(p.checked > 0);
      CHECK(p.improving.empty());
      CHECK(p.base_tail == iid_tail(p.base, k));
    }
    CHECK(seen);
  }
  // two_point_inv_k is undefined once kx > 1
  CHECK(witness_optimality_probe(3, q("1/2"), 10).size() == 1);
  CHECK_THROWS_AS(witness_optimality_probe(3, q("1/10"), 1), PreconditionError);
}
