// SPDX-License-Identifier: Apache-2.0
#include "entrobust/wootters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrobust {

namespace {

// sigma_y (x) sigma_y: anti-diagonal (-1, 1, 1, -1), real symmetric.
ComplexMatrix flip_y() {
  ComplexMatrix y(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("spin_flip: 4x4 only");
  ComplexMatrix y = flip_y();
  return y * rho.conjugate() * y;
}

std::vector<cplx> spin_flip(const std::vector<cplx>& v) {
  if (v.size() != 4) throw std::invalid_argument("spin_flip: length-4 only");
  return {-std::conj(v[3]), std::conj(v[2]), std::conj(v[1]), -std::conj(v[0])};
}

WoottersData wootters_decompose(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<std::size_t>{2, 2})
    throw std::invalid_argument("wootters_decompose: dims must be [2,2]");

  EigResult er = eig_hermitian(rho.matrix());
  std::array<std::vector<cplx>, 4> w;
  for (std::size_t i = 0; i < 4; ++i) {
    const double mu = std::max(er.values[i], 0.0);
    w[i].resize(4);
    for (std::size_t k = 0; k < 4; ++k) w[i][k] = std::sqrt(mu) * er.vectors(k, i);
  }

  // tau_ij = <w_i | w~_j>, complex symmetric.
  ComplexMatrix tau(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) tau(i, j) = inner(w[i], spin_flip(w[j]));
  }

  // Real symmetric embedding: H (u;v) = s (u;v)  <=>  tau conj(u+iv) = s (u+iv).
  ComplexMatrix h(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double re = tau(i, j).real(), im = tau(i, j).imag();
      h(i, j) = re;
      h(i, j + 4) = im;
      h(i + 4, j) = im;
      h(i + 4, j + 4) = -re;
    }
  EigResult eh = eig_hermitian(h);

  // Candidates in descending eigenvalue order; PLUS/MINUS pairs mean the top
  // half carries the Takagi values. Complex Gram-Schmidt guards the
  // degenerate (near-zero) block where a candidate can be i times an already
  // selected one.
  std::array<std::vector<cplx>, 4> q;
  std::array<double, 4> lam{};
  std::size_t accepted = 0;
  for (std::size_t c = 0; c < 8 && accepted < 4; ++c) {
    std::vector<cplx> cand(4);
    for (std::size_t k = 0; k < 4; ++k)
      cand[k] = cplx(eh.vectors(k, c).real(), eh.vectors(k + 4, c).real());
    for (std::size_t a = 0; a < accepted; ++a) {
      const cplx ov = inner(q[a], cand);
      for (std::size_t k = 0; k < 4; ++k) cand[k] -= ov * q[a][k];
    }
    double nrm = std::sqrt(inner(cand, cand).real());
    if (nrm < 1e-4) continue;
    for (auto& e : cand) e /= nrm;
    q[accepted] = cand;
    lam[accepted] = std::max(eh.values[c], 0.0);
    ++accepted;
  }
  if (accepted < 4)
    throw std::runtime_error("wootters_decompose: Takagi basis selection failed");

  WoottersData out;
  out.lambda = lam;
  for (std::size_t i = 0; i < 4; ++i) {
    out.x[i].assign(4, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) out.x[i][k] += q[i][j] * w[j][k];
  }
  out.concurrence = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
  out.k_available = lam[3] >= kRankTol;
  if (out.k_available) {
    for (std::size_t i = 0; i < 4; ++i)
      out.K[i] = inner(out.x[i], out.x[i]).real() / lam[i];
  } else {
    out.K = {0.0, 0.0, 0.0, 0.0};
  }
  return out;
}

double concurrence(const DensityMatrix& rho) {
  return wootters_decompose(rho).concurrence;
}

}  // namespace entrobust
