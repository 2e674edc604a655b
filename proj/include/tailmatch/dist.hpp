#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tailmatch/rational.hpp"

namespace tailmatch {

struct Atom {
  Rational value;
  Rational prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite distribution on [0,1] with rational probabilities summing to 1.
///
/// Atoms are kept sorted by strictly increasing value. On construction atoms
/// with probability zero are dropped and atoms sharing a value are merged.
/// Throws PreconditionError for values outside [0,1], negative probabilities,
/// or a total other than 1.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  Rational mean() const;

  /// Divides every value by `divisor` (> 0). Throws PreconditionError when a
  /// scaled value exceeds 1, since capping would change the tail event.
  DiscreteDistribution scale(const Rational& divisor) const;

  /// [["value","prob"],...] with canonical rationals; also the tie-break key
  /// used by the grid search.
  std::string serialize() const;

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  std::vector<Atom> atoms_;
};

// Independent, not necessarily identical, components.
struct IndependentVector {
  std::vector<DiscreteDistribution> components;
};

/// P(X_1 + ... + X_k >= threshold) for i.i.d. copies of d.
Rational iid_tail(const DiscreteDistribution& d, std::uint32_t k,
                  const Rational& threshold = Rational(1));

/// P(sum of the components >= threshold).
Rational vector_tail(const IndependentVector& v, const Rational& threshold = Rational(1));

/// {0: 1-x, 1: x}
DiscreteDistribution two_point_one(const Rational& x);

/// {0: 1-kx, 1/k: kx}
DiscreteDistribution two_point_inv_k(std::uint32_t k, const Rational& x);

/// t constants equal to x, then k-t i.i.d. copies of {0, 1-tx} with
/// P(1-tx) = x/(1-tx).
IndependentVector samuels_vector(std::uint32_t k, const Rational& x, std::uint32_t t);

/// Moves each value a to min(ceil(m a)/m, 1), merging collisions.
DiscreteDistribution round_values(const DiscreteDistribution& d, std::uint64_t m);

/// Atoms 2.. get probability ceil(n p)/n; the smallest-value atom takes the
/// residual. Throws PreconditionError naming the smallest n0 such that every
/// n >= n0 leaves a positive residual.
DiscreteDistribution round_probs(const DiscreteDistribution& d, std::uint64_t n);

}  // namespace tailmatch
