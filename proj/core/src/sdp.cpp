// SPDX-License-Identifier: Apache-2.0
#include "entrobust/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace entrobust {

void SdpProblem::validate() const {
  if (!F0.square()) throw std::invalid_argument("sdp: F0 not square");
  if (F0.rows() > kMaxOrder) throw std::invalid_argument("sdp: matrix order > 64");
  if (c.size() != Fi.size()) throw std::invalid_argument("sdp: |c| != |Fi|");
  if (c.size() > 200) throw std::invalid_argument("sdp: more than 200 variables");
  if (!F0.is_hermitian(1e-10)) throw std::invalid_argument("sdp: F0 not Hermitian");
  for (const auto& f : Fi) {
    if (f.rows() != F0.rows() || f.cols() != F0.cols())
      throw std::invalid_argument("sdp: Fi order mismatch");
    if (!f.is_hermitian(1e-10)) throw std::invalid_argument("sdp: Fi not Hermitian");
  }
  for (double v : c)
    if (!std::isfinite(v)) throw std::invalid_argument("sdp: non-finite c");
}

ComplexMatrix sdp_matrix_at(const SdpProblem& problem, const std::vector<double>& x) {
  ComplexMatrix f = problem.F0;
  for (std::size_t i = 0; i < x.size(); ++i) f += x[i] * problem.Fi[i];
  return f.hermitian_part();
}

double check_slackness(const ComplexMatrix& f_at_x, const ComplexMatrix& z) {
  return (f_at_x * z).frobenius_norm();
}

namespace {

// Solve L X = B columnwise (L lower triangular).
ComplexMatrix tri_solve_left(const ComplexMatrix& L, const ComplexMatrix& B) {
  const std::size_t n = L.rows();
  ComplexMatrix X = B;
  for (std::size_t col = 0; col < B.cols(); ++col)
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = X(i, col);
      for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * X(k, col);
      X(i, col) = s / L(i, i);
    }
  return X;
}

// Cholesky with an escalating diagonal ridge; the ridge only engages when
// the iterate sits on the numerical PSD boundary.
bool cholesky_ridge(const ComplexMatrix& A, ComplexMatrix& L) {
  if (cholesky(A, L)) return true;
  const double unit = std::max(std::abs(A.trace().real()) / A.rows(), 1e-30);
  double ridge = 1e-14 * unit;
  for (int attempt = 0; attempt < 5; ++attempt) {
    ComplexMatrix shifted = A;
    shifted += ridge * ComplexMatrix::identity(A.rows());
    if (cholesky(shifted, L)) return true;
    ridge *= 100.0;
  }
  return false;
}

// Distance to the PSD boundary along D from P >= 0; +inf when D points
// inward. Falls back to spectral bisection when P is numerically singular.
double step_to_boundary(const ComplexMatrix& P, const ComplexMatrix& D) {
  ComplexMatrix L;
  if (cholesky(P, L)) {
    ComplexMatrix Y = tri_solve_left(L, D);
    ComplexMatrix B = tri_solve_left(L, Y.adjoint()).adjoint();
    const double mn = min_eigenvalue(B.hermitian_part());
    if (mn >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / mn;
  }
  const double floor = -1e-13 * (P.frobenius_norm() + D.frobenius_norm());
  auto ok = [&](double a) {
    ComplexMatrix T = P;
    T += a * D;
    return min_eigenvalue(T.hermitian_part()) >= floor;
  };
  if (ok(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  if (!ok(0.0)) return 0.0;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

struct RealCholesky {
  // Real SPD factorization with a diagonal ridge fallback.
  std::vector<std::vector<double>> L;
  bool factor(std::vector<std::vector<double>> M) {
    const std::size_t m = M.size();
    double ridge = 0.0;
    for (int attempt = 0; attempt < 6; ++attempt) {
      L.assign(m, std::vector<double>(m, 0.0));
      bool ok = true;
      for (std::size_t j = 0; j < m && ok; ++j) {
        double d = M[j][j] + ridge;
        for (std::size_t k = 0; k < j; ++k) d -= L[j][k] * L[j][k];
        if (!(d > 0.0) || !std::isfinite(d)) {
          ok = false;
          break;
        }
        L[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < m; ++i) {
          double s = M[i][j];
          for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
          L[i][j] = s / L[j][j];
        }
      }
      if (ok) return true;
      double dmax = 0.0;
      for (std::size_t j = 0; j < m; ++j) dmax = std::max(dmax, std::abs(M[j][j]));
      ridge = std::max(ridge * 100.0, 1e-14 * std::max(dmax, 1.0));
    }
    return false;
  }
  std::vector<double> solve(std::vector<double> b) const {
    const std::size_t m = L.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < i; ++k) b[i] -= L[i][k] * b[k];
      b[i] /= L[i][i];
    }
    for (std::size_t ii = m; ii-- > 0;) {
      for (std::size_t k = ii + 1; k < m; ++k) b[ii] -= L[k][ii] * b[k];
      b[ii] /= L[ii][ii];
    }
    return b;
  }
};

}  // namespace

SdpSolution solve_sdp(const SdpProblem& problem, double tol, const SdpInit* init,
                      const SdpIterCallback& cb) {
  problem.validate();
  const std::size_t n = problem.F0.rows();
  const std::size_t m = problem.c.size();
  const int max_iter = 500;

  std::vector<double> x(m, 0.0);
  ComplexMatrix S, Z;
  if (init) {
    x = init->x;
    S = sdp_matrix_at(problem, x);
    Z = init->Z;
    ComplexMatrix Ltest;
    if (!cholesky(S, Ltest) || !cholesky(Z, Ltest))
      throw std::invalid_argument("solve_sdp: init not strictly feasible");
  } else {
    const double s0 = std::max(1.0, 2.0 * problem.F0.frobenius_norm());
    double c0 = 1.0;
    for (double v : problem.c) c0 = std::max(c0, std::abs(v));
    S = s0 * ComplexMatrix::identity(n);
    Z = c0 * ComplexMatrix::identity(n);
  }

  const double scale_d = 1.0 + problem.F0.frobenius_norm();
  double scale_p = 1.0;
  for (double v : problem.c) scale_p = std::max(scale_p, std::abs(v));

  SdpSolution sol;
  sol.x = x;
  sol.Z = Z;

  auto finalize = [&](SdpStatus st, int iters) {
    sol.status = st;
    sol.x = x;
    sol.Z = Z.hermitian_part();
    ComplexMatrix F = sdp_matrix_at(problem, x);
    sol.p_star = 0.0;
    for (std::size_t i = 0; i < m; ++i) sol.p_star += problem.c[i] * x[i];
    sol.d_star = -inner_frob(problem.F0, sol.Z);
    sol.gap = sol.p_star - sol.d_star;
    sol.slackness_residual = check_slackness(F, sol.Z);
    sol.dual_feasibility_residual = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      sol.dual_feasibility_residual =
          std::max(sol.dual_feasibility_residual,
                   std::abs(inner_frob(problem.Fi[i], sol.Z) - problem.c[i]));
    sol.primal_min_eig = min_eigenvalue(F);
    sol.iterations = iters;
    return sol;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    // Residuals.
    ComplexMatrix rd = sdp_matrix_at(problem, x) - S;  // want 0
    std::vector<double> rp(m);
    double rp_norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      rp[i] = problem.c[i] - inner_frob(problem.Fi[i], Z);
      rp_norm = std::max(rp_norm, std::abs(rp[i]));
    }
    const double mu = inner_frob(S, Z) / static_cast<double>(n);
    double pobj = 0.0;
    for (std::size_t i = 0; i < m; ++i) pobj += problem.c[i] * x[i];
    const double dobj = -inner_frob(problem.F0, Z);
    const double gap = pobj - dobj;
    if (cb) cb(iter, pobj, dobj, gap);

    // The gap tracks tol; the feasibility residuals are pinned at the 1e-7
    // contract (they bottom out near sqrt(eps) once the scaling matrices get
    // ill-conditioned, independently of how far the gap can be pushed).
    const double obj_scale = 1.0 + std::abs(pobj) + std::abs(dobj);
    const double resid_tol = std::min(1e-7, std::max(100.0 * tol, 1e-10));
    const bool near_optimal =
        rd.frobenius_norm() <= resid_tol * scale_d && rp_norm <= resid_tol * scale_p &&
        std::abs(gap) <= tol * obj_scale && inner_frob(S, Z) <= tol * obj_scale * n;
    if (near_optimal) {
      // keep polishing until the complementary-slackness contract holds,
      // unless the steps have degenerated
      const double slack = (S * Z).frobenius_norm();
      if (slack <= std::sqrt(tol) * obj_scale || mu <= 1e-14 * obj_scale)
        return finalize(SdpStatus::optimal, iter);
    }

    // Divergence of the dual variable with a near-certificate: primal infeasible.
    const double trz = Z.trace().real();
    if (trz > 1e9 * scale_p) {
      double viol = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        viol = std::max(viol, std::abs(inner_frob(problem.Fi[i], Z)) / trz);
      if (viol <= 1e-7 && inner_frob(problem.F0, Z) / trz < -1e-9)
        return finalize(SdpStatus::infeasible, iter);
    }

    // Nesterov-Todd scaling point: W Z W = S.
    ComplexMatrix E = herm_sqrt(S);
    ComplexMatrix T = (E * Z * E).hermitian_part();
    ComplexMatrix Tinvsqrt = herm_inv_sqrt(T);
    ComplexMatrix W = (E * Tinvsqrt * E).hermitian_part();
    ComplexMatrix Lw;
    if (!cholesky_ridge(W, Lw))
      return finalize(near_optimal ? SdpStatus::optimal : SdpStatus::not_converged,
                      iter);
    ComplexMatrix G = cholesky_inverse(Lw);  // W^{-1}

    ComplexMatrix Zinv;
    {
      ComplexMatrix Lz;
      if (!cholesky_ridge(Z, Lz))
        return finalize(near_optimal ? SdpStatus::optimal : SdpStatus::not_converged,
                        iter);
      Zinv = cholesky_inverse(Lz);
    }

    // Schur complement M_ij = <F_i, G F_j G>.
    std::vector<ComplexMatrix> GFG(m);
    for (std::size_t j = 0; j < m; ++j) GFG[j] = (G * problem.Fi[j] * G).hermitian_part();
    std::vector<std::vector<double>> M(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        M[i][j] = inner_frob(problem.Fi[i], GFG[j]);
        M[j][i] = M[i][j];
      }
    RealCholesky chol;
    if (!chol.factor(M))
      return finalize(near_optimal ? SdpStatus::optimal : SdpStatus::not_converged,
                      iter);

    auto newton = [&](const ComplexMatrix& Rc, std::vector<double>& dx,
                      ComplexMatrix& dS, ComplexMatrix& dZ) {
      ComplexMatrix core = (G * (Rc - rd) * G).hermitian_part();
      std::vector<double> q(m);
      for (std::size_t i = 0; i < m; ++i)
        q[i] = inner_frob(problem.Fi[i], core) - rp[i];
      dx = chol.solve(q);
      dS = rd;
      for (std::size_t i = 0; i < m; ++i) dS += dx[i] * problem.Fi[i];
      dS = dS.hermitian_part();
      dZ = core;
      for (std::size_t i = 0; i < m; ++i) dZ -= dx[i] * GFG[i];
      dZ = dZ.hermitian_part();
    };

    const double eta = iter < 5 ? 0.9 : 0.97;

    // Predictor (affine direction).
    std::vector<double> dx;
    ComplexMatrix dS, dZ;
    {
      ComplexMatrix Rc = -1.0 * S;
      newton(Rc, dx, dS, dZ);
    }
    const double ap_aff = std::min(1.0, step_to_boundary(S, dS));
    const double ad_aff = std::min(1.0, step_to_boundary(Z, dZ));
    double mu_aff = 0.0;
    {
      ComplexMatrix Sa = S + ap_aff * dS;
      ComplexMatrix Za = Z + ad_aff * dZ;
      mu_aff = std::max(0.0, inner_frob(Sa, Za) / static_cast<double>(n));
    }
    double sigma = std::pow(mu_aff / std::max(mu, 1e-300), 3.0);
    sigma = std::clamp(sigma, 1e-4, 0.9);
    // loss of centrality (a slack eigenvalue far below mu) calls for a
    // centering-dominated step
    const double off_center = std::min(min_eigenvalue(S), min_eigenvalue(Z));
    if (off_center < 1e-2 * mu) sigma = std::max(sigma, 0.5);

    // Corrector (recentred direction, same factorization).
    {
      ComplexMatrix Rc = (sigma * mu) * Zinv - S;
      newton(Rc, dx, dS, dZ);
    }
    const double ap = std::min(1.0, eta * step_to_boundary(S, dS));
    const double ad = std::min(1.0, eta * step_to_boundary(Z, dZ));
    if (ap <= 1e-14 || ad <= 1e-14)
      return finalize(near_optimal ? SdpStatus::optimal : SdpStatus::not_converged, iter);

    for (std::size_t i = 0; i < m; ++i) x[i] += ap * dx[i];
    S += ap * dS;
    Z += ad * dZ;
    S = S.hermitian_part();
    Z = Z.hermitian_part();
  }
  return finalize(SdpStatus::not_converged, max_iter);
}

}  // namespace entrobust
