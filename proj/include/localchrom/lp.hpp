#pragma once

#include "localchrom/deadline.hpp"
#include "localchrom/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

// Exact two-phase simplex over rationals with Bland's rule. Intended for the
// small dense programs of the weighting module; all variables are >= 0.
namespace localchrom::lp {

enum class Sense { LE, GE, EQ };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LE;
  Rational rhs = 0;
};

struct Problem {
  int num_vars = 0;
  std::vector<Rational> objective;  // maximised
  std::vector<Constraint> constraints;
};

enum class Status { OPTIMAL, INFEASIBLE, UNBOUNDED };

struct Solution {
  Status status = Status::INFEASIBLE;
  Rational value = 0;
  std::vector<Rational> x;
  /// One multiplier per constraint: >= 0 on LE rows, <= 0 on GE rows, free on
  /// EQ rows. At optimality Σ rhs_i y_i = value and Aᵀy >= objective.
  std::vector<Rational> duals;
};

namespace detail {

class Tableau {
 public:
  explicit Tableau(const Problem& p) : m_(static_cast<int>(p.constraints.size())), n_(p.num_vars) {
    if (static_cast<int>(p.objective.size()) != n_) throw std::invalid_argument("objective length mismatch");
    // Columns: originals, then one slack/surplus per inequality row, then one
    // artificial per GE/EQ row.
    negated_.assign(static_cast<std::size_t>(m_), false);
    std::vector<Sense> sense(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      const auto& c = p.constraints[i];
      if (static_cast<int>(c.coeffs.size()) != n_) throw std::invalid_argument("constraint length mismatch");
      sense[i] = c.sense;
      if (c.rhs < 0) {
        negated_[i] = true;
        if (c.sense == Sense::LE) sense[i] = Sense::GE;
        else if (c.sense == Sense::GE) sense[i] = Sense::LE;
      }
    }
    int cols = n_;
    slack_col_.assign(static_cast<std::size_t>(m_), -1);
    art_col_.assign(static_cast<std::size_t>(m_), -1);
    for (int i = 0; i < m_; ++i)
      if (sense[i] != Sense::EQ) slack_col_[i] = cols++;
    first_art_ = cols;
    for (int i = 0; i < m_; ++i)
      if (sense[i] != Sense::LE) art_col_[i] = cols++;
    cols_ = cols;

    a_.assign(static_cast<std::size_t>(m_), std::vector<Rational>(static_cast<std::size_t>(cols_), Rational(0)));
    b_.resize(static_cast<std::size_t>(m_));
    basis_.resize(static_cast<std::size_t>(m_));
    slack_sign_.assign(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
      const auto& c = p.constraints[i];
      Rational sign = negated_[i] ? -1 : 1;
      for (int j = 0; j < n_; ++j) a_[i][j] = sign * c.coeffs[j];
      b_[i] = sign * c.rhs;
      if (slack_col_[i] >= 0) {
        slack_sign_[i] = sense[i] == Sense::LE ? 1 : -1;
        a_[i][slack_col_[i]] = slack_sign_[i];
      }
      if (art_col_[i] >= 0) a_[i][art_col_[i]] = 1;
      basis_[i] = sense[i] == Sense::LE ? slack_col_[i] : art_col_[i];
    }
    cost_.assign(static_cast<std::size_t>(cols_), Rational(0));
    for (int j = 0; j < n_; ++j) cost_[j] = p.objective[j];
  }

  Solution solve(const Deadline& deadline) {
    Solution sol;
    // Phase 1: maximise −Σ artificials.
    std::vector<Rational> phase1(static_cast<std::size_t>(cols_), Rational(0));
    for (int j = first_art_; j < cols_; ++j) phase1[j] = -1;
    if (first_art_ < cols_) {
      run(phase1, cols_, deadline);
      if (objective_value(phase1) != 0) return sol;
      drive_out_artificials();
    }
    // Phase 2: original objective; artificial columns may not enter.
    if (!run(cost_, first_art_, deadline)) {
      sol.status = Status::UNBOUNDED;
      return sol;
    }
    sol.status = Status::OPTIMAL;
    sol.value = objective_value(cost_);
    sol.x.assign(static_cast<std::size_t>(n_), Rational(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.x[basis_[i]] = b_[i];
    // y = c_B B⁻¹: read from the reduced costs of the identity-like columns.
    auto reduced = reduced_costs(cost_);
    sol.duals.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      Rational y;
      if (art_col_[i] >= 0) y = reduced[art_col_[i]];
      else y = reduced[slack_col_[i]] * slack_sign_[i];
      sol.duals[i] = negated_[i] ? Rational(-y) : y;
    }
    return sol;
  }

 private:
  std::vector<Rational> reduced_costs(const std::vector<Rational>& c) const {
    std::vector<Rational> r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) {
      Rational z = 0;
      for (int i = 0; i < m_; ++i)
        if (c[basis_[i]] != 0 && a_[i][j] != 0) z += c[basis_[i]] * a_[i][j];
      r[j] = z - c[j];
    }
    return r;
  }

  Rational objective_value(const std::vector<Rational>& c) const {
    Rational v = 0;
    for (int i = 0; i < m_; ++i) v += c[basis_[i]] * b_[i];
    return v;
  }

  void pivot(int row, int col) {
    Rational inv = 1 / a_[row][col];
    for (auto& x : a_[row]) x *= inv;
    b_[row] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rational f = a_[i][col];
      for (int j = 0; j < cols_; ++j)
        if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  /// Returns false when unbounded.
  bool run(const std::vector<Rational>& c, int enter_limit, const Deadline& deadline) {
    while (true) {
      deadline.check();
      auto r = reduced_costs(c);
      int enter = -1;
      for (int j = 0; j < enter_limit; ++j)
        if (r[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (int j = 0; j < first_art_; ++j)
        if (a_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      // Otherwise the row is redundant and its artificial stays basic at 0.
    }
  }

  int m_, n_, cols_ = 0, first_art_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_, cost_;
  std::vector<int> basis_, slack_col_, art_col_, slack_sign_;
  std::vector<bool> negated_;
};

}  // namespace detail

inline Solution maximize(const Problem& p, const Deadline& deadline = {}) {
  return detail::Tableau(p).solve(deadline);
}

}  // namespace localchrom::lp
