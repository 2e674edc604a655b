#include "tailmatch/lp.hpp"

#include <vector>

#include "tailmatch/errors.hpp"

namespace tailmatch {

std::string to_string(WeightRole role) {
  return role == WeightRole::kFractionalMatching ? "fractional-matching" : "fractional-cover";
}

Rational WeightFunction::at(std::size_t index) const {
  const auto it = carrier.find(index);
  return it == carrier.end() ? Rational(0) : it->second;
}

bool WeightFunction::is_feasible(const Hypergraph& h) const {
  Rational total;
  for (const auto& [index, w] : carrier) {
    if (w.sign() < 0 || w > Rational(1)) return false;
    total += w;
  }
  if (total != size) return false;

  if (role == WeightRole::kFractionalMatching) {
    if (!carrier.empty() && carrier.rbegin()->first >= h.edge_count()) return false;
    std::vector<Rational> load(h.n() + 1);
    for (const auto& [index, w] : carrier) {
      for (Vertex v : h.edges()[index]) load[v] += w;
    }
    for (const auto& l : load) {
      if (l > Rational(1)) return false;
    }
    return true;
  }

  if (!carrier.empty() && (carrier.begin()->first < 1 || carrier.rbegin()->first > h.n())) {
    return false;
  }
  for (const auto& e : h.edges()) {
    Rational covered;
    for (Vertex v : e) covered += at(v);
    if (covered < Rational(1)) return false;
  }
  return true;
}

namespace {

// Dense simplex tableau. Row i reads  sum_j a[i][j] x_j = rhs[i]  with
// basis[i] the basic column; `reduced` is the objective row.
struct Tableau {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  std::vector<Rational> reduced;
  std::vector<std::size_t> basis;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return reduced.size(); }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = a[r];
    const Rational inv = Rational(1) / prow[c];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols(); ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      support.push_back(j);
    }
    rhs[r] *= inv;

    auto eliminate = [&](std::vector<Rational>& row, Rational& value) {
      if (row[c].is_zero()) return;
      const Rational factor = row[c];
      for (std::size_t j : support) row[j] -= factor * prow[j];
      value -= factor * rhs[r];
    };
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i != r) eliminate(a[i], rhs[i]);
    }
    Rational unused;
    eliminate(reduced, unused);
    basis[r] = c;
  }

  std::vector<Rational> primal_values() const {
    std::vector<Rational> x(cols());
    for (std::size_t i = 0; i < rows(); ++i) x[basis[i]] = rhs[i];
    return x;
  }
};

// maximize c.x  s.t.  A x <= b, x >= 0, with b >= 0.
// Primal simplex with Bland's rule from the slack basis.
std::vector<Rational> maximize_packing(const std::vector<std::vector<Rational>>& A,
                                       const std::vector<Rational>& b,
                                       const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t nvars = c.size();
  Tableau t;
  t.a.assign(m, std::vector<Rational>(nvars + m));
  t.rhs = b;
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nvars; ++j) t.a[i][j] = A[i][j];
    t.a[i][nvars + i] = 1;
    t.basis[i] = nvars + i;
  }
  t.reduced.assign(nvars + m, Rational(0));
  for (std::size_t j = 0; j < nvars; ++j) t.reduced[j] = c[j];

  for (;;) {
    std::size_t enter = t.cols();
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (t.reduced[j].sign() > 0) {
        enter = j;
        break;
      }
    }
    if (enter == t.cols()) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.a[i][enter].sign() <= 0) continue;
      const Rational ratio = t.rhs[i] / t.a[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw ConsistencyError("packing LP reported unbounded");
    t.pivot(leave, enter);
  }
  auto x = t.primal_values();
  x.resize(nvars);
  return x;
}

// minimize c.y  s.t.  A y >= b, y >= 0, with c >= 0.
// Dual simplex with Bland-style selection, starting from the surplus basis
// (dual feasible since c >= 0).
std::vector<Rational> minimize_covering(const std::vector<std::vector<Rational>>& A,
                                        const std::vector<Rational>& b,
                                        const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t nvars = c.size();
  Tableau t;
  t.a.assign(m, std::vector<Rational>(nvars + m));
  t.rhs.resize(m);
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nvars; ++j) t.a[i][j] = -A[i][j];
    t.a[i][nvars + i] = 1;
    t.rhs[i] = -b[i];
    t.basis[i] = nvars + i;
  }
  t.reduced.assign(nvars + m, Rational(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    if (c[j].sign() < 0) throw PreconditionError("covering LP needs nonnegative costs");
    t.reduced[j] = c[j];
  }

  for (;;) {
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.rhs[i].sign() < 0 && (leave == m || t.basis[i] < t.basis[leave])) leave = i;
    }
    if (leave == m) break;

    std::size_t enter = t.cols();
    Rational best_ratio;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const Rational& coeff = t.a[leave][j];
      if (coeff.sign() >= 0) continue;
      const Rational ratio = t.reduced[j] / -coeff;
      if (enter == t.cols() || ratio < best_ratio) {
        enter = j;
        best_ratio = ratio;
      }
    }
    if (enter == t.cols()) throw ConsistencyError("covering LP reported infeasible");
    t.pivot(leave, enter);
  }
  auto y = t.primal_values();
  y.resize(nvars);
  return y;
}

void check_unit_range(const std::vector<Rational>& values, const char* what) {
  for (const auto& v : values) {
    if (v.sign() < 0 || v > Rational(1)) {
      throw ConsistencyError(std::string(what) + " produced weight " + v.str() +
                             " outside [0,1]");
    }
  }
}

}  // namespace

FractionalSolution fractional_matching(const Hypergraph& h) {
  FractionalSolution out;
  out.witness.role = WeightRole::kFractionalMatching;
  const std::size_t m = h.edge_count();
  if (m == 0) return out;

  // one packing row per vertex, one column per edge
  std::vector<std::vector<Rational>> A(h.n(), std::vector<Rational>(m));
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : h.edges()[e]) A[v - 1][e] = 1;
  }
  const auto w = maximize_packing(A, std::vector<Rational>(h.n(), Rational(1)),
                                  std::vector<Rational>(m, Rational(1)));
  check_unit_range(w, "fractional matching");
  for (std::size_t e = 0; e < m; ++e) {
    if (w[e].is_zero()) continue;
    out.witness.carrier.emplace(e, w[e]);
    out.value += w[e];
  }
  out.witness.size = out.value;
  return out;
}

FractionalSolution fractional_cover(const Hypergraph& h) {
  FractionalSolution out;
  out.witness.role = WeightRole::kFractionalCover;
  const std::size_t m = h.edge_count();
  if (m == 0) return out;

  // one covering row per edge, one column per vertex
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(h.n()));
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : h.edges()[e]) A[e][v - 1] = 1;
  }
  const auto y = minimize_covering(A, std::vector<Rational>(m, Rational(1)),
                                   std::vector<Rational>(h.n(), Rational(1)));
  check_unit_range(y, "fractional cover");
  for (std::size_t v = 0; v < y.size(); ++v) {
    if (y[v].is_zero()) continue;
    out.witness.carrier.emplace(v + 1, y[v]);
    out.value += y[v];
  }
  out.witness.size = out.value;
  return out;
}

DualityReport verify_duality(const Hypergraph& h) {
  auto matching = fractional_matching(h);
  auto cover = fractional_cover(h);
  DualityReport r;
  r.nu_star = matching.value;
  r.tau_star = cover.value;
  r.matching = std::move(matching.witness);
  r.cover = std::move(cover.witness);
  r.matching_feasible = r.matching.is_feasible(h);
  r.cover_feasible = r.cover.is_feasible(h);
  r.equal = r.nu_star == r.tau_star;
  if (!r.matching_feasible || !r.cover_feasible || !r.equal) {
    throw ConsistencyError("duality check failed: nu* = " + r.nu_star.str() +
                           ", tau* = " + r.tau_star.str() +
                           (r.matching_feasible ? "" : ", matching witness infeasible") +
                           (r.cover_feasible ? "" : ", cover witness infeasible"));
  }
  return r;
}

}  // namespace tailmatch
