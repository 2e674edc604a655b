#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tailmatch/numeric.hpp"
#include "tailmatch/rational.hpp"

namespace tailmatch {

enum class Regime { kBelowX0, kBetweenX0AndInvK, kAtLeastInvK };

std::string to_string(Regime regime);

struct PiecewiseReport {
  Rational value;
  Regime regime = Regime::kBelowX0;
  std::string formula_used;
};

/// Conjectured extremal tail m_k(x): max{1-(1-x)^k, (kx)^k} below 1/k, else 1.
/// The regime is chosen by comparing the two branch values exactly; a tie at
/// x > 0 (the crossover itself) is reported as the (kx)^k regime.
PiecewiseReport conjectured_m(std::uint32_t k, const Rational& x);

/// The known two-variable answer: 2x - x^2 below 2/5, 4x^2 on [2/5, 1/2), 1 after.
Rational hoeffding_shrikhande_m2(const Rational& x);

struct SamuelsValue {
  Rational value;
  std::uint32_t argmin_t = 0;
};

/// 1 - min_t (1 - x/(1-tx))^{k-t} over t = 0..k-1 for x < 1/k (smallest t on
/// ties), else 1 with argmin_t = 0.
SamuelsValue samuels_s(std::uint32_t k, const Rational& x);

/// Per-t term 1 - (1 - x/(1-tx))^{k-t}.
Rational samuels_term(std::uint32_t k, const Rational& x, std::uint32_t t);

/// max{C(n,k) - C(n-s,k), C(ks+k-1,k)}; requires n >= ks+k-1.
BigInt erdos_bound(std::uint64_t n, std::uint64_t k, std::uint64_t s);

/// Bracket of the root of 1-(1-x)^k = (kx)^k in (0, 1/k); k >= 2.
RootInterval x0(std::uint32_t k, const Rational& eps);

/// Bracket of the root of 1-(1-x)^k = x/(1-(k-1)x) in (0, 1/k); k >= 2.
RootInterval x1(std::uint32_t k, const Rational& eps);

/// Continuous envelope used when passing to limits in the discretization
/// argument: the piecewise conjectured value, as a function of x.
Rational lemma1_M(std::uint32_t k, const Rational& x);

struct SweepRow {
  Rational x;
  PiecewiseReport m;
  SamuelsValue s;
};

/// Rows for x = j/(points*k), j = 0..points.
std::vector<SweepRow> sweep(std::uint32_t k, std::uint32_t points = 200);

}  // namespace tailmatch
