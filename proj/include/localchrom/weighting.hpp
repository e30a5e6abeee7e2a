#pragma once

#include "localchrom/graph.hpp"
#include "localchrom/lp.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace localchrom {

/// Optimal blow-up weighting: t* = max over ω >= 0, Σω = 1 of min_v Σ_{u∈Γ(v)} ω(u).
struct WeightingResult {
  Rational optimum;
  std::vector<Rational> weights;  // an optimal ω, total 1
  /// Optimality certificate: y >= 0, Σy = 1, Σ_{v∈Γ(u)} y_v <= t* for every u.
  std::vector<Rational> dual;
  bool support_full = false;   // some optimal ω is strictly positive everywhere
  bool has_isolated = false;   // forces t* = 0

  bool beats(const Rational& c) const { return optimum > c; }
};

namespace detail {

/// Rows: (degree rows for every v), then Σω = 1. Variables ω_0..ω_{n-1} then extras.
inline lp::Problem weighting_base(const Graph& g, int extra_vars) {
  const int n = g.order();
  lp::Problem p;
  p.num_vars = n + extra_vars;
  p.objective.assign(static_cast<std::size_t>(p.num_vars), Rational(0));
  lp::Constraint total{std::vector<Rational>(static_cast<std::size_t>(p.num_vars), Rational(0)), lp::Sense::EQ, 1};
  for (int v = 0; v < n; ++v) total.coeffs[v] = 1;
  p.constraints.push_back(total);
  return p;
}

}  // namespace detail

/// Exact check of the dual certificate for a claimed optimum.
inline bool check_weighting_certificate(const Graph& g, const Rational& t, const std::vector<Rational>& omega,
                                        const std::vector<Rational>& dual) {
  const int n = g.order();
  if (static_cast<int>(omega.size()) != n || static_cast<int>(dual.size()) != n) return false;
  Rational sum_w = 0, sum_y = 0;
  for (int v = 0; v < n; ++v) {
    if (omega[v] < 0 || dual[v] < 0) return false;
    sum_w += omega[v];
    sum_y += dual[v];
  }
  if (sum_w != 1 || sum_y != 1) return false;
  for (int v = 0; v < n; ++v) {
    Rational deg = 0, load = 0;
    for (int u : g.neighbours(v)) {
      deg += omega[u];
      load += dual[u];
    }
    if (deg < t || load > t) return false;
  }
  return true;
}

inline WeightingResult optimal_weighting(const Graph& g, const Deadline& deadline = {}) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("optimal_weighting needs a non-empty graph");
  WeightingResult result;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) result.has_isolated = true;

  // Variables ω (n) and t; maximise t subject to t − Σ_{u∈Γ(v)} ω_u <= 0.
  lp::Problem p = detail::weighting_base(g, 1);
  p.objective[n] = 1;
  for (int v = 0; v < n; ++v) {
    lp::Constraint row{std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0)), lp::Sense::LE, 0};
    row.coeffs[n] = 1;
    for (int u : g.neighbours(v)) row.coeffs[u] = -1;
    p.constraints.push_back(row);
  }
  lp::Solution sol = lp::maximize(p, deadline);
  if (sol.status != lp::Status::OPTIMAL) throw std::logic_error("weighting LP not optimal");
  result.optimum = sol.value;
  result.weights.assign(sol.x.begin(), sol.x.begin() + n);

  Rational total = 0;
  for (int v = 0; v < n; ++v) total += sol.duals[1 + v];
  result.dual.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) result.dual[v] = total == 0 ? Rational(0) : Rational(sol.duals[1 + v] / total);
  if (!check_weighting_certificate(g, result.optimum, result.weights, result.dual))
    throw std::logic_error("weighting LP produced an invalid certificate");

  // support_full: maximise ε with ω_v >= ε and all degrees >= t*.
  lp::Problem q = detail::weighting_base(g, 1);
  q.objective[n] = 1;
  for (int v = 0; v < n; ++v) {
    lp::Constraint deg{std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0)), lp::Sense::GE,
                       result.optimum};
    for (int u : g.neighbours(v)) deg.coeffs[u] = 1;
    q.constraints.push_back(deg);
    lp::Constraint pos{std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0)), lp::Sense::GE, 0};
    pos.coeffs[v] = 1;
    pos.coeffs[n] = -1;
    q.constraints.push_back(pos);
  }
  lp::Solution eps = lp::maximize(q, deadline);
  result.support_full = eps.status == lp::Status::UNBOUNDED || (eps.status == lp::Status::OPTIMAL && eps.value > 0);
  return result;
}

/// Vertices that receive positive weight in some optimal weighting; the rest
/// are zero in every optimum.
inline VertexSet optimal_support(const Graph& g, const Rational& optimum, const Deadline& deadline = {}) {
  const int n = g.order();
  VertexSet out;
  for (int target = 0; target < n; ++target) {
    lp::Problem p = detail::weighting_base(g, 0);
    p.objective[target] = 1;
    for (int v = 0; v < n; ++v) {
      lp::Constraint deg{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), lp::Sense::GE, optimum};
      for (int u : g.neighbours(v)) deg.coeffs[u] = 1;
      p.constraints.push_back(deg);
    }
    lp::Solution sol = lp::maximize(p, deadline);
    if (sol.status == lp::Status::OPTIMAL && sol.value > 0) out.insert(target);
  }
  return out;
}

/// min_v Σ_{u∈Γ(v)} ω(u) > c · Σω, exactly.
inline bool verify_weighting(const Graph& g, const std::vector<Rational>& omega, const Rational& c) {
  WeightedGraph wg(g, omega);  // validates length and signs
  Rational total = wg.total_weight();
  if (total == 0) throw std::invalid_argument("verify_weighting needs a weighting that is not all zero");
  return wg.min_weighted_degree() > c * total;
}

}  // namespace localchrom
