// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "entrobust/linalg.hpp"

namespace entrobust {

/// minimize c^T x  subject to  F(x) = F0 + sum_i x_i F_i >= 0 (PSD), with
/// Hermitian data. The dual maximizes -trF0 Z over Z >= 0 with tr(F_i Z) = c_i.
struct SdpProblem {
  std::vector<double> c;
  ComplexMatrix F0;
  std::vector<ComplexMatrix> Fi;

  void validate() const;
};

enum class SdpStatus { optimal, infeasible, not_converged };

struct SdpSolution {
  SdpStatus status = SdpStatus::not_converged;
  std::vector<double> x;
  ComplexMatrix Z;
  double p_star = 0.0;  // c^T x
  double d_star = 0.0;  // -tr(F0 Z)
  double gap = 0.0;     // c^T x + tr(F0 Z)
  double slackness_residual = 0.0;         // ||F(x) Z||_F
  double dual_feasibility_residual = 0.0;  // max_i |tr(F_i Z) - c_i|
  double primal_min_eig = 0.0;             // min eig F(x)
  int iterations = 0;
};

/// Strictly feasible warm start; F(x) and Z must be positive definite.
struct SdpInit {
  std::vector<double> x;
  ComplexMatrix Z;
};

using SdpIterCallback =
    std::function<void(int iter, double primal_obj, double dual_obj, double gap)>;

/// Short-step primal-dual path following with Nesterov-Todd scaling on the
/// dense Hermitian block; iteration cap 500. Accepts an optional strictly
/// feasible start (both residuals then stay at roundoff, so the weak-duality
/// gap is nonnegative on every iterate). The callback observes each iterate.
SdpSolution solve_sdp(const SdpProblem& problem, double tol,
                      const SdpInit* init = nullptr, const SdpIterCallback& cb = {});

double check_slackness(const ComplexMatrix& f_at_x, const ComplexMatrix& z);

ComplexMatrix sdp_matrix_at(const SdpProblem& problem, const std::vector<double>& x);

}  // namespace entrobust
