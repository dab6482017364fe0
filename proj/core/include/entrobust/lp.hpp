// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "entrobust/linalg.hpp"

namespace entrobust {

/// min c^T x  s.t.  A x = b, x >= 0   (dense, standard form)
struct LpProblem {
  std::vector<double> c;
  std::vector<std::vector<double>> A;  // rows
  std::vector<double> b;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;
  double objective = 0.0;
};

/// Two-phase primal simplex with Bland's rule.
LpSolution solve_lp(const LpProblem& problem);

/// Phase-one feasibility of {A x = b, x >= 0}.
bool lp_feasible(const std::vector<std::vector<double>>& A, const std::vector<double>& b);

}  // namespace entrobust
