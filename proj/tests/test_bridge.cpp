#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tailmatch/bridge.hpp"
#include "tailmatch/errors.hpp"
#include "tailmatch/lp.hpp"
#include "tailmatch/numeric.hpp"

using namespace tailmatch;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

DiscreteDistribution dist(std::initializer_list<std::pair<const char*, const char*>> atoms) {
  std::vector<Atom> out;
  for (const auto& [v, p] : atoms) out.push_back({q(v), q(p)});
  return DiscreteDistribution(out);
}

bool weights_cover(const BridgeInstance& b) {
  for (const auto& e : b.hypergraph.edges()) {
    Rational s;
    for (Vertex v : e) s += b.weights[v - 1];
    if (s < Rational(1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dist_to_hypergraph examples") {
  const auto coin = dist({{"0", "1/2"}, {"1", "1/2"}});
  const auto b1 = dist_to_hypergraph(coin, 2, 1);
  CHECK(b1.r == 2);
  CHECK(b1.hypergraph.n() == 2);
  CHECK(b1.weights == std::vector<Rational>{Rational(0), Rational(1)});
  REQUIRE(b1.hypergraph.edge_count() == 1);
  CHECK(b1.hypergraph.edges()[0] == Edge{1, 2});

  const auto b2 = dist_to_hypergraph(dist({{"0", "2/3"}, {"1/2", "1/3"}}), 2, 1);
  CHECK(b2.r == 3);
  CHECK(b2.hypergraph.edge_count() == 0);
  CHECK(b2.weight_total() == q("1/2"));

  const auto b3 = dist_to_hypergraph(coin, 2, 2);
  CHECK(b3.hypergraph.n() == 4);
  CHECK(b3.hypergraph.edge_count() == 5);

  CHECK_THROWS_AS(dist_to_hypergraph(coin, 3, 1000, 1000), SizeError);
}

TEST_CASE("tail_identity_check examples") {
  const auto coin = dist({{"0", "1/2"}, {"1", "1/2"}});
  const auto a = tail_identity_check(dist_to_hypergraph(coin, 2, 1), 2);
  CHECK(a.lhs == q("3/4"));
  CHECK(a.rhs == q("3/4"));
  CHECK(a.repeated == 1);

  const auto b = tail_identity_check(dist_to_hypergraph(coin, 2, 2), 2);
  CHECK(b.rhs == q("3/4"));
  CHECK(b.repeated == 2);

  const auto c = tail_identity_check(dist_to_hypergraph(dist({{"0", "2/3"}, {"1/2", "1/3"}}), 2, 1), 2);
  CHECK(c.lhs == q("1/9"));
  CHECK(c.rhs == q("1/9"));
  CHECK(c.repeated == 1);

  CHECK_THROWS_AS(tail_identity_check(dist_to_hypergraph(coin, 2, 1), 3), PreconditionError);
}

TEST_CASE("bridge identity on random rational distributions") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> atoms_d(1, 3);
  std::uniform_int_distribution<long> den_d(1, 6);
  int checked = 0;
  while (checked < 60) {
    // values j/6, probabilities: random weights normalized, denominators <= 6
    const int m = atoms_d(rng);
    const long pden = den_d(rng);
    if (pden < m) continue;
    std::vector<long> parts(static_cast<std::size_t>(m), 1);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (long left = pden - m; left > 0; --left) ++parts[static_cast<std::size_t>(pick(rng))];
    std::uniform_int_distribution<long> val(0, 6);
    std::vector<Atom> atoms;
    for (long p : parts) atoms.push_back({Rational(BigInt(val(rng)), BigInt(6)), Rational(BigInt(p), BigInt(pden))});
    const DiscreteDistribution d(atoms);
    const std::uint32_t k = 2 + checked % 2;
    const std::uint64_t n = 1 + checked % 3;
    const auto b = dist_to_hypergraph(d, k, n);

    CHECK(weights_cover(b));
    CHECK(b.weight_total() == Rational(b.hypergraph.n()) * d.mean());
    CHECK(fractional_cover(b.hypergraph).value <= b.weight_total());

    const auto id = tail_identity_check(b, k);
    CHECK(id.lhs == id.rhs);
    const auto tuples = oracle::count_vertex_tuples(b.weights, k);
    CHECK(tuples.favorable_repeated == id.repeated);
    CHECK(tuples.favorable_injective == factorial(k) * static_cast<unsigned long>(b.hypergraph.edge_count()));
    BigInt nr_pow;
    mpz_ui_pow_ui(nr_pow.get_mpz_t(), b.hypergraph.n(), k - 1);
    CHECK(id.repeated <= binomial(k, 2) * nr_pow);

    // the complementary counting path agrees
    const auto alt = tail_identity_check(b, k, 0);
    CHECK(alt.method == RepeatCountMethod::kComplement);
    CHECK(alt.repeated == id.repeated);
    ++checked;
  }
}

TEST_CASE("hypergraph_to_tail_bound examples") {
  const auto tri = hypergraph_to_tail_bound(clique(5, 2, 3), 2);
  CHECK(tri.density_term == q("6/25"));
  CHECK(tri.empirical == dist({{"0", "2/5"}, {"1/2", "3/5"}}));
  CHECK(tri.tail == q("9/25"));
  CHECK(tri.cover_mean == q("3/10"));

  const auto star = hypergraph_to_tail_bound(cov(5, 2, 1), 2);
  CHECK(star.density_term == q("8/25"));
  CHECK(star.empirical == dist({{"0", "4/5"}, {"1", "1/5"}}));
  CHECK(star.tail == q("9/25"));

  const auto empty = hypergraph_to_tail_bound(Hypergraph(4, 3), 3);
  CHECK(empty.density_term == Rational(0));
  CHECK(empty.density_term <= empty.tail);

  CHECK_THROWS_AS(hypergraph_to_tail_bound(clique(5, 2, 3), 3), PreconditionError);
}

TEST_CASE("forward bound holds on random hypergraphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::uint32_t k = 2 + seed % 2;
    const auto h = random_hypergraph(8, k, 4 + seed % 20, seed);
    const auto r = hypergraph_to_tail_bound(h, k);
    CHECK(r.density_term <= r.tail);
    CHECK(r.empirical.mean() == r.cover_mean);
  }
}

TEST_CASE("density probe examples") {
  const auto cov_rows = density_convergence_probe(Family::kCov, 3, q("1/5"), {60});
  REQUIRE(cov_rows.size() == 1);
  CHECK(cov_rows[0].parameter == 12);
  CHECK(cov_rows[0].density == Rational(1) - q("17296/34220"));
  CHECK(cov_rows[0].limit == q("61/125"));
  CHECK(cov_rows[0].cover_ok);
  CHECK(cov_rows[0].built);

  const auto cl_rows = density_convergence_probe(Family::kClique, 3, q("1/5"), {60});
  CHECK(cl_rows[0].parameter == 36);
  CHECK(cl_rows[0].density == Rational(binomial(36, 3), binomial(60, 3)));
  CHECK(cl_rows[0].limit == q("27/125"));
  CHECK(cl_rows[0].cover_ok);
  CHECK(cl_rows[0].cover_size == Rational(12));

  for (auto family : {Family::kCov, Family::kClique}) {
    const auto zero = density_convergence_probe(family, 3, Rational(0), {10, 20});
    for (const auto& row : zero) {
      CHECK(row.density == Rational(0));
      CHECK(row.limit == Rational(0));
      CHECK(row.cover_ok);
    }
  }
  CHECK_THROWS_AS(density_convergence_probe(Family::kCov, 3, q("1/2"), {10}), PreconditionError);
  CHECK(parse_family("clique") == Family::kClique);
  CHECK_THROWS_AS(parse_family("star"), ParseError);
}

TEST_CASE("density probe counts without enumerating past the cap") {
  const auto rows = density_convergence_probe(Family::kCov, 3, q("1/5"), {30, 200}, 10'000);
  CHECK(rows[0].built);
  CHECK_FALSE(rows[1].built);
  CHECK(rows[1].edges == binomial(200, 3) - binomial(160, 3));
  CHECK(rows[1].cover_ok);
}
