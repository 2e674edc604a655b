#pragma once

#include <cstdint>
#include <functional>

#include "tailmatch/rational.hpp"

namespace tailmatch {

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(std::uint64_t n);

/// n (n-1) ... (n-k+1); zero when k > n.
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);

// Closed bracket [lo, hi], lo < hi, around a sign change of some function.
struct RootInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

/// Any function whose value at a rational point can be computed exactly.
/// Only the sign of the result is used.
using ExactFunction = std::function<Rational(const Rational&)>;

/// Bisection on exact signs. Requires f(lo), f(hi) strictly opposite in sign
/// (BracketError otherwise) and eps > 0. The result has width <= eps and its
/// endpoints keep the original strict signs. When a midpoint is an exact root
/// the bracket is tightened symmetrically around it.
RootInterval bisect_exact(const ExactFunction& f, Rational lo, Rational hi,
                          const Rational& eps);

}  // namespace tailmatch
