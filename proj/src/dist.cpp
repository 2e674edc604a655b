#include "tailmatch/dist.hpp"

#include <algorithm>
#include <map>

#include "tailmatch/errors.hpp"

namespace tailmatch {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) {
  std::map<Rational, Rational> merged;
  Rational total;
  for (auto& a : atoms) {
    if (a.value.sign() < 0 || a.value > Rational(1)) {
      throw PreconditionError("distribution value " + a.value.str() + " outside [0,1]");
    }
    if (a.prob.sign() < 0) {
      throw PreconditionError("negative probability " + a.prob.str());
    }
    total += a.prob;
    if (!a.prob.is_zero()) merged[a.value] += a.prob;
  }
  if (total != Rational(1)) {
    throw PreconditionError("probabilities sum to " + total.str() + ", not 1");
  }
  atoms_.reserve(merged.size());
  for (auto& [value, prob] : merged) atoms_.push_back({value, prob});
}

Rational DiscreteDistribution::mean() const {
  Rational m;
  for (const auto& a : atoms_) m += a.value * a.prob;
  return m;
}

DiscreteDistribution DiscreteDistribution::scale(const Rational& divisor) const {
  if (divisor.sign() <= 0) throw PreconditionError("scale divisor must be positive");
  std::vector<Atom> out;
  for (const auto& a : atoms_) {
    const Rational v = a.value / divisor;
    if (v > Rational(1)) {
      throw PreconditionError("scaled value " + v.str() + " exceeds 1");
    }
    out.push_back({v, a.prob});
  }
  return DiscreteDistribution(std::move(out));
}

std::string DiscreteDistribution::serialize() const {
  std::string s = "[";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) s += ",";
    s += "[\"" + atoms_[i].value.str() + "\",\"" + atoms_[i].prob.str() + "\"]";
  }
  return s + "]";
}

namespace {

// Distribution of partial sums below the threshold; mass at or above it is
// accumulated separately since it can never drop back.
class CappedConvolution {
 public:
  explicit CappedConvolution(Rational threshold) : threshold_(std::move(threshold)) {
    below_[Rational(0)] = Rational(1);
    if (threshold_.sign() <= 0) {
      reached_ = 1;
      below_.clear();
    }
  }

  void add(const DiscreteDistribution& d) {
    std::map<Rational, Rational> next;
    for (const auto& [sum, p] : below_) {
      for (const auto& a : d.atoms()) {
        const Rational s = sum + a.value;
        const Rational mass = p * a.prob;
        if (s >= threshold_) {
          reached_ += mass;
        } else {
          next[s] += mass;
        }
      }
    }
    below_ = std::move(next);
  }

  const Rational& reached() const { return reached_; }

 private:
  Rational threshold_;
  std::map<Rational, Rational> below_;
  Rational reached_;
};

}  // namespace

Rational iid_tail(const DiscreteDistribution& d, std::uint32_t k, const Rational& threshold) {
  if (k < 1) throw PreconditionError("iid_tail requires k >= 1");
  if (threshold.sign() <= 0) throw PreconditionError("iid_tail requires threshold > 0");
  CappedConvolution conv(threshold);
  for (std::uint32_t i = 0; i < k; ++i) conv.add(d);
  return conv.reached();
}

Rational vector_tail(const IndependentVector& v, const Rational& threshold) {
  CappedConvolution conv(threshold);
  for (const auto& c : v.components) conv.add(c);
  return conv.reached();
}

DiscreteDistribution two_point_one(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) {
    throw PreconditionError("two_point_one requires 0 <= x <= 1");
  }
  return DiscreteDistribution({{Rational(0), Rational(1) - x}, {Rational(1), x}});
}

DiscreteDistribution two_point_inv_k(std::uint32_t k, const Rational& x) {
  if (k < 1) throw PreconditionError("two_point_inv_k requires k >= 1");
  const Rational kx = Rational(k) * x;
  if (x.sign() < 0 || kx > Rational(1)) {
    throw PreconditionError("two_point_inv_k requires 0 <= kx <= 1");
  }
  return DiscreteDistribution({{Rational(0), Rational(1) - kx}, {Rational(1) / Rational(k), kx}});
}

IndependentVector samuels_vector(std::uint32_t k, const Rational& x, std::uint32_t t) {
  if (k < 1 || t > k - 1) throw PreconditionError("samuels_vector requires 0 <= t <= k-1");
  if (x.sign() < 0) throw PreconditionError("samuels_vector requires x >= 0");
  const Rational top = Rational(1) - Rational(t) * x;
  if (top.sign() <= 0 || x > top) {
    throw PreconditionError("samuels_vector requires x/(1-tx) <= 1 with 1-tx > 0");
  }
  IndependentVector v;
  for (std::uint32_t i = 0; i < t; ++i) {
    v.components.emplace_back(std::vector<Atom>{{x, Rational(1)}});
  }
  const Rational p = x / top;
  const DiscreteDistribution lump({{Rational(0), Rational(1) - p}, {top, p}});
  for (std::uint32_t i = t; i < k; ++i) v.components.push_back(lump);
  return v;
}

DiscreteDistribution round_values(const DiscreteDistribution& d, std::uint64_t m) {
  if (m < 1) throw PreconditionError("round_values requires m >= 1");
  const Rational grid(m);
  std::vector<Atom> out;
  for (const auto& a : d.atoms()) {
    const Rational up = min(Rational((a.value * grid).ceil()) / grid, Rational(1));
    out.push_back({up, a.prob});
  }
  return DiscreteDistribution(std::move(out));
}

namespace {

Rational rounded_residual(const std::vector<Atom>& atoms, std::uint64_t n) {
  const Rational grid(n);
  Rational rest;
  for (std::size_t j = 1; j < atoms.size(); ++j) {
    rest += Rational((atoms[j].prob * grid).ceil()) / grid;
  }
  return Rational(1) - rest;
}

}  // namespace

DiscreteDistribution round_probs(const DiscreteDistribution& d, std::uint64_t n) {
  if (n < 1) throw PreconditionError("round_probs requires n >= 1");
  const auto& atoms = d.atoms();
  const Rational residual = rounded_residual(atoms, n);
  if (residual.sign() <= 0) {
    // residual >= p_1 - (m-1)/n, so every n > (m-1)/p_1 works; walk down
    // from that guarantee to the last failure.
    const Rational guarantee = Rational(atoms.size() - 1) / atoms.front().prob;
    std::uint64_t n0 = static_cast<std::uint64_t>(guarantee.floor().get_ui()) + 1;
    while (n0 > 1 && rounded_residual(atoms, n0 - 1).sign() > 0) --n0;
    throw PreconditionError("round_probs: n = " + std::to_string(n) +
                            " too small (residual " + residual.str() +
                            " <= 0); every n >= " + std::to_string(n0) + " is usable");
  }
  const Rational grid(n);
  std::vector<Atom> out;
  out.push_back({atoms.front().value, residual});
  for (std::size_t j = 1; j < atoms.size(); ++j) {
    out.push_back({atoms[j].value, Rational((atoms[j].prob * grid).ceil()) / grid});
  }
  return DiscreteDistribution(std::move(out));
}

}  // namespace tailmatch
