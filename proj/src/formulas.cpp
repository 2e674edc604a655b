#include "tailmatch/formulas.hpp"

#include "tailmatch/errors.hpp"

namespace tailmatch {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kBelowX0:
      return "below-x0";
    case Regime::kBetweenX0AndInvK:
      return "between-x0-and-1/k";
    case Regime::kAtLeastInvK:
      return "at-least-1/k";
  }
  return "unknown";
}

namespace {

void require_k_x(std::uint32_t k, const Rational& x) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (x.sign() < 0) throw PreconditionError("x must be >= 0");
}

Rational two_point_branch(std::uint32_t k, const Rational& x) {
  return Rational(1) - (Rational(1) - x).pow(k);
}

Rational scaled_branch(std::uint32_t k, const Rational& x) { return (Rational(k) * x).pow(k); }

}  // namespace

PiecewiseReport conjectured_m(std::uint32_t k, const Rational& x) {
  require_k_x(k, x);
  if (Rational(k) * x >= Rational(1)) return {Rational(1), Regime::kAtLeastInvK, "1"};
  const Rational a = two_point_branch(k, x);
  const Rational b = scaled_branch(k, x);
  // For k = 1 both branches are x; report Markov's bound as the first regime.
  if (a > b || x.is_zero() || k == 1) return {a, Regime::kBelowX0, "1-(1-x)^k"};
  return {b, Regime::kBetweenX0AndInvK, "(kx)^k"};
}

Rational hoeffding_shrikhande_m2(const Rational& x) {
  if (x.sign() < 0) throw PreconditionError("x must be >= 0");
  if (x < Rational(2) / Rational(5)) return Rational(2) * x - x * x;
  if (x < Rational(1) / Rational(2)) return Rational(4) * x * x;
  return Rational(1);
}

Rational samuels_term(std::uint32_t k, const Rational& x, std::uint32_t t) {
  const Rational top = Rational(1) - Rational(t) * x;
  return Rational(1) - (Rational(1) - x / top).pow(k - t);
}

SamuelsValue samuels_s(std::uint32_t k, const Rational& x) {
  require_k_x(k, x);
  if (Rational(k) * x >= Rational(1)) return {Rational(1), 0};
  SamuelsValue best{Rational(0), 0};
  Rational smallest;
  for (std::uint32_t t = 0; t < k; ++t) {
    const Rational miss = (Rational(1) - x / (Rational(1) - Rational(t) * x)).pow(k - t);
    if (t == 0 || miss < smallest) {
      smallest = miss;
      best.argmin_t = t;
    }
  }
  best.value = Rational(1) - smallest;
  return best;
}

BigInt erdos_bound(std::uint64_t n, std::uint64_t k, std::uint64_t s) {
  if (k < 1) throw PreconditionError("erdos_bound requires k >= 1");
  if (n < k * s + k - 1) {
    throw PreconditionError("erdos_bound requires n >= ks+k-1 = " +
                            std::to_string(k * s + k - 1) + ", got n = " + std::to_string(n));
  }
  const BigInt cover_side = binomial(n, k) - binomial(n - s, k);
  const BigInt clique_side = binomial(k * s + k - 1, k);
  return cover_side > clique_side ? cover_side : clique_side;
}

namespace {

// Largest lo = 1/(2^j k) with f(lo) > 0; both crossover functions are
// positive just right of 0.
Rational positive_left_end(const ExactFunction& f, std::uint32_t k) {
  Rational lo = Rational(1) / Rational(2 * k);
  for (int i = 0; i < 64 && f(lo).sign() <= 0; ++i) lo /= Rational(2);
  return lo;
}

}  // namespace

RootInterval x0(std::uint32_t k, const Rational& eps) {
  if (k < 2) throw PreconditionError("x0 requires k >= 2");
  const ExactFunction f = [k](const Rational& x) {
    return two_point_branch(k, x) - scaled_branch(k, x);
  };
  const Rational hi = Rational(1) / Rational(k);
  return bisect_exact(f, positive_left_end(f, k), hi, eps);
}

RootInterval x1(std::uint32_t k, const Rational& eps) {
  if (k < 2) throw PreconditionError("x1 requires k >= 2");
  const ExactFunction f = [k](const Rational& x) {
    return two_point_branch(k, x) - x / (Rational(1) - Rational(k - 1) * x);
  };
  const Rational hi = Rational(1) / Rational(k);
  return bisect_exact(f, positive_left_end(f, k), hi, eps);
}

Rational lemma1_M(std::uint32_t k, const Rational& x) {
  require_k_x(k, x);
  if (Rational(k) * x >= Rational(1)) return Rational(1);
  return max(two_point_branch(k, x), scaled_branch(k, x));
}

std::vector<SweepRow> sweep(std::uint32_t k, std::uint32_t points) {
  if (k < 1 || points < 1) throw PreconditionError("sweep requires k >= 1 and points >= 1");
  std::vector<SweepRow> rows;
  rows.reserve(points + 1);
  for (std::uint32_t j = 0; j <= points; ++j) {
    const Rational x = Rational(j) / Rational(std::uint64_t{points} * k);
    rows.push_back({x, conjectured_m(k, x), samuels_s(k, x)});
  }
  return rows;
}

}  // namespace tailmatch
