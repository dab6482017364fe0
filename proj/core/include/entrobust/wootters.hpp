// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "entrobust/linalg.hpp"

namespace entrobust {

inline constexpr double kRankTol = 1e-10;

/// Spin-flip Y rho* Y with Y = sigma_y (x) sigma_y, in the fixed product basis.
ComplexMatrix spin_flip(const ComplexMatrix& rho);
std::vector<cplx> spin_flip(const std::vector<cplx>& v);

/// Decomposition rho = sum |x_i><x_i| with <x_i|x~_j> = lambda_i delta_ij.
/// lambda decreasing; K_i = <x_i|x_i>/lambda_i defined only when
/// k_available (lambda_4 >= 1e-10; below that the tetrahedron coordinates
/// diverge and robustness must go through the SDP path).
struct WoottersData {
  std::array<double, 4> lambda;
  std::array<std::vector<cplx>, 4> x;
  std::array<double, 4> K;
  bool k_available = false;
  double concurrence = 0.0;
};

/// Construction: eigendecompose rho into subnormalized vectors, form the
/// complex symmetric overlap matrix tau_ij = <w_i|w~_j>, Takagi-factorize it
/// through the real symmetric embedding [[Re tau, Im tau],[Im tau, -Re tau]]
/// (eigenvectors (u;v) at value s give Takagi vectors u+iv), and recombine.
WoottersData wootters_decompose(const DensityMatrix& rho);

double concurrence(const DensityMatrix& rho);

}  // namespace entrobust
