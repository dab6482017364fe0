// SPDX-License-Identifier: Apache-2.0
#include "entrobust/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace entrobust {

namespace {

constexpr double kPivotTol = 1e-11;

struct Tableau {
  std::size_t m, n;                     // constraints, columns (incl. artificials)
  std::vector<std::vector<double>> t;   // m rows of n coefficients
  std::vector<double> rhs;              // length m, kept >= 0
  std::vector<std::size_t> basis;       // length m

  void pivot(std::size_t row, std::size_t col) {
    const double piv = t[row][col];
    for (std::size_t j = 0; j < n; ++j) t[row][j] /= piv;
    rhs[row] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = t[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) t[i][j] -= f * t[row][j];
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  }

  // Bland's rule on reduced costs of `cost` restricted to columns < limit.
  // Returns optimal/unbounded through `status`.
  LpStatus run(const std::vector<double>& cost, std::size_t limit) {
    const std::size_t max_iter = 50000;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      std::vector<double> y(m);  // multipliers of basic costs
      for (std::size_t i = 0; i < m; ++i) y[i] = cost[basis[i]];
      std::size_t enter = n;
      for (std::size_t j = 0; j < limit; ++j) {
        double red = cost[j];
        for (std::size_t i = 0; i < m; ++i) red -= y[i] * t[i][j];
        if (red < -kPivotTol) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter == n) return LpStatus::optimal;
      std::size_t leave = m;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] > kPivotTol) {
          const double ratio = rhs[i] / t[i][enter];
          if (ratio < best - 1e-15 ||
              (std::abs(ratio - best) <= 1e-15 &&
               (leave == m || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave == m) return LpStatus::unbounded;
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration limit");
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const std::size_t m = problem.A.size();
  const std::size_t n = problem.c.size();
  for (const auto& row : problem.A)
    if (row.size() != n) throw std::invalid_argument("solve_lp: ragged A");
  if (problem.b.size() != m) throw std::invalid_argument("solve_lp: b size mismatch");

  Tableau tab;
  tab.m = m;
  tab.n = n + m;  // artificials appended
  tab.t.assign(m, std::vector<double>(tab.n, 0.0));
  tab.rhs.resize(m);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * problem.A[i][j];
    tab.rhs[i] = sign * problem.b[i];
    tab.t[i][n + i] = 1.0;
    tab.basis[i] = n + i;
  }

  // Phase one: drive artificials out.
  std::vector<double> phase1(tab.n, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1.0;
  if (tab.run(phase1, tab.n) != LpStatus::optimal)
    throw std::runtime_error("simplex: phase one unbounded");
  double art = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) art += tab.rhs[i];
  LpSolution sol;
  if (art > 1e-11) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  // Pivot residual artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(tab.t[i][j]) > kPivotTol) {
        col = j;
        break;
      }
    if (col < n) tab.pivot(i, col);
    // else: redundant row, harmless with zero rhs
  }

  std::vector<double> phase2(tab.n, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.c[j];
  const LpStatus st = tab.run(phase2, n);
  if (st == LpStatus::unbounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs[i];
  sol.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += problem.c[j] * sol.x[j];
  return sol;
}

bool lp_feasible(const std::vector<std::vector<double>>& A, const std::vector<double>& b) {
  LpProblem p;
  p.A = A;
  p.b = b;
  p.c.assign(A.empty() ? 0 : A[0].size(), 0.0);
  return solve_lp(p).status == LpStatus::optimal;
}

}  // namespace entrobust
