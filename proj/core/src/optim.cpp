// SPDX-License-Identifier: Apache-2.0
#include "entrobust/optim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "entrobust/lp.hpp"
#include "entrobust/separability.hpp"

namespace entrobust {

namespace {

// Orthonormal Hermitian basis of n x n: diagonal units, then real and
// imaginary pair units scaled by 1/sqrt(2).
std::vector<ComplexMatrix> hermitian_basis(std::size_t n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(n * n);
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix b(n, n);
    b(i, i) = 1.0;
    basis.push_back(b);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ComplexMatrix re(n, n), im(n, n);
      re(i, j) = r;
      re(j, i) = r;
      im(i, j) = cplx(0.0, r);
      im(j, i) = cplx(0.0, -r);
      basis.push_back(re);
      basis.push_back(im);
    }
  return basis;
}

ComplexMatrix block_diag3(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& c) {
  const std::size_t n = a.rows();
  ComplexMatrix m(3 * n, 3 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(n + i, n + j) = b(i, j);
      m(2 * n + i, 2 * n + j) = c(i, j);
    }
  return m;
}

}  // namespace

SdpProblem make_ppt_robustness_problem(const DensityMatrix& rho) {
  if (!rho.bipartite())
    throw std::invalid_argument("robustness_ppt_sdp: bipartite dims required");
  const std::size_t da = rho.dims()[0], db = rho.dims()[1];
  const std::size_t n = da * db;
  ComplexMatrix zero(n, n);

  SdpProblem prob;
  prob.F0 = block_diag3(zero, zero, partial_transpose(rho));
  auto basis = hermitian_basis(n);
  prob.c.reserve(basis.size());
  prob.Fi.reserve(basis.size());
  for (const auto& b : basis) {
    prob.c.push_back(b.trace().real());
    ComplexMatrix bt = partial_transpose(b, da, db, 1);
    prob.Fi.push_back(block_diag3(b, bt, bt));
  }
  return prob;
}

RobustnessResult robustness_ppt_sdp(const DensityMatrix& rho, double tol) {
  SdpProblem prob = make_ppt_robustness_problem(rho);
  const std::size_t n = rho.order();

  // Strictly feasible pair: X = I is PT-invariant and dominates the PT
  // deficit of any state; Z = diag(I/2, I/4, I/4) reproduces c exactly.
  SdpInit init;
  init.x.assign(prob.c.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) init.x[i] = 1.0;
  ComplexMatrix z1 = 0.5 * ComplexMatrix::identity(n);
  ComplexMatrix z2 = 0.25 * ComplexMatrix::identity(n);
  init.Z = block_diag3(z1, z2, z2);

  SdpSolution sol = solve_sdp(prob, tol, &init);
  if (sol.status == SdpStatus::infeasible)
    throw std::runtime_error("robustness_ppt_sdp: solver reported infeasible");
  if (sol.status == SdpStatus::not_converged)
    throw std::runtime_error("robustness_ppt_sdp: solver did not converge");

  const bool exact = is_ppt(rho).ppt_exact;
  const double s = sol.p_star;

  auto fill_certs = [&](RobustnessResult& r) {
    r.certificates["gap"] = sol.gap;
    r.certificates["slackness_residual"] = sol.slackness_residual;
    r.certificates["dual_feasibility_residual"] = sol.dual_feasibility_residual;
    r.certificates["iterations"] = static_cast<double>(sol.iterations);
  };

  if (s <= std::max(tol * 10.0, 1e-9)) {
    // Zero mixing weight means separable only where PPT decides; elsewhere
    // it is just a vanishing lower bound (bound entanglement stays unseen).
    RobustnessResult r{std::max(s, 0.0), rho,   rho, RobustnessMethod::sdp,
                       {},               exact, !exact};
    fill_certs(r);
    r.certificates["pseudomixture_residual"] = 0.0;
    return r;
  }

  ComplexMatrix x_mat(n, n);
  {
    auto basis = hermitian_basis(n);
    for (std::size_t k = 0; k < basis.size(); ++k) x_mat += sol.x[k] * basis[k];
    x_mat = x_mat.hermitian_part();
  }
  ComplexMatrix dprime_m = (1.0 / s) * x_mat;
  ComplexMatrix prime_m = (1.0 / (1.0 + s)) * (rho.matrix() + x_mat);
  DensityMatrix rho_pp(dprime_m.hermitian_part(), rho.dims());
  DensityMatrix rho_p(prime_m.hermitian_part(), rho.dims());

  RobustnessResult r{s, rho_p, rho_pp, RobustnessMethod::sdp, {}, false, !exact};
  fill_certs(r);
  r.certificates["pseudomixture_residual"] = verify_pseudomixture(rho, rho_p, rho_pp, s);
  r.certificates["pt_min_eig_prime"] = min_eigenvalue(partial_transpose(rho_p));
  r.certificates["pt_min_eig_dprime"] = min_eigenvalue(partial_transpose(rho_pp));
  r.ppt_lower_bound = !exact;
  return r;
}

namespace {

// Feasibility of the Bell-diagonal pseudomixture at mixing weight s: both
// probability vectors in the octahedron, coupled by p + s p'' = (1+s) p'.
bool bd_mixture_feasible(const std::array<double, 4>& p, double s) {
  // variables: p'(4), p''(4), slack'(4), slack''(4)
  const std::size_t nv = 16;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<double> row(nv, 0.0);
    row[i] = 1.0 + s;
    row[4 + i] = -s;
    A.push_back(row);
    b.push_back(p[i]);
  }
  {
    std::vector<double> row(nv, 0.0);
    for (std::size_t i = 0; i < 4; ++i) row[4 + i] = 1.0;
    A.push_back(row);
    b.push_back(1.0);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<double> row(nv, 0.0);
    row[i] = 1.0;
    row[8 + i] = 1.0;
    A.push_back(row);
    b.push_back(0.5);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<double> row(nv, 0.0);
    row[4 + i] = 1.0;
    row[12 + i] = 1.0;
    A.push_back(row);
    b.push_back(0.5);
  }
  return lp_feasible(A, b);
}

RobustnessResult family_lp_bd(const BdParams& params, double tol) {
  params.validate();
  const auto verdict = bd_separable(params);
  if (verdict.margin >= -kBoundaryTol) {
    DensityMatrix rho = bd_state(params);
    RobustnessResult r{0.0, rho, rho, RobustnessMethod::family_lp, {}, true, false};
    r.certificates["pseudomixture_residual"] = 0.0;
    return r;
  }

  double lo = 0.0, hi = 8.0;  // bracket [0, 2*dim]
  if (!bd_mixture_feasible(params.p, hi))
    throw std::runtime_error("family_lp(bd): bracket exhausted");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (bd_mixture_feasible(params.p, mid))
      hi = mid;
    else
      lo = mid;
  }
  const double s = hi;

  // Witness texture at the bisected s: dominant component pinned to the
  // octahedron facet, remainder spread evenly on the far face.
  std::array<std::size_t, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return params.p[a] > params.p[b]; });
  BdParams dprime{}, prime{};
  for (std::size_t k = 0; k < 4; ++k) dprime.p[idx[k]] = k == 0 ? 0.0 : 1.0 / 3.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    prime.p[k] = (params.p[k] + s * dprime.p[k]) / (1.0 + s);
    norm += prime.p[k];
  }
  for (std::size_t k = 0; k < 4; ++k) prime.p[k] /= norm;

  DensityMatrix rho = bd_state(params);
  DensityMatrix rho_p = bd_state(prime);
  DensityMatrix rho_pp = bd_state(dprime);
  RobustnessResult r{s, rho_p, rho_pp, RobustnessMethod::family_lp, {}, false, false};
  r.certificates["pseudomixture_residual"] = verify_pseudomixture(rho, rho_p, rho_pp, s);
  r.certificates["witness_prime_margin"] = family_boundary_margin(FamilyDescriptor{prime});
  r.certificates["witness_dprime_margin"] =
      family_boundary_margin(FamilyDescriptor{dprime});
  double lam_hat = 1e300;
  for (std::size_t k = 0; k < 4; ++k)
    if (params.p[k] > 0.0) lam_hat = std::min(lam_hat, prime.p[k] / params.p[k]);
  r.certificates["lambda_hat_identity_residual"] = std::abs(lam_hat - 1.0 / (1.0 + s));
  return r;
}

// Diagonal restriction of the PPT robustness program for a fixed finite
// basis family: variables Y >= 0 (componentwise) with
//   family(Y)^TB >= 0  and  (family(p) + family(Y))^TB >= 0,
// minimizing sum Y. Exact separability on 2x2 / 2x3. The iterate stays
// primal feasible, so the objective error is one-sided and bounded by the
// duality gap; a 1e-9 gap leaves an order of magnitude under the 1e-8
// cross-check tolerance (the optimal face is often degenerate and deeper
// gaps are not reliably reachable).
template <std::size_t N>
RobustnessResult family_lp_diag_sdp(const std::array<double, N>& p,
                                    const std::vector<std::vector<cplx>>& basis,
                                    std::size_t da, std::size_t db,
                                    const DensityMatrix& rho,
                                    std::function<DensityMatrix(const std::array<double, N>&)>
                                        make_state,
                                    double tol) {
  const std::size_t n = da * db;
  ComplexMatrix zero(n, n);
  std::vector<ComplexMatrix> proj_pt(N);
  for (std::size_t k = 0; k < N; ++k)
    proj_pt[k] = partial_transpose(outer(basis[k], basis[k]), da, db, 1);

  SdpProblem prob;
  prob.c.assign(N, 1.0);
  // blocks: diag(Y) ; family(Y)^TB ; (rho + family(Y))^TB
  ComplexMatrix f0_third = partial_transpose(rho.matrix(), da, db, 1);
  ComplexMatrix zN(N, N);
  auto embed = [&](const ComplexMatrix& yblock, const ComplexMatrix& b2,
                   const ComplexMatrix& b3) {
    const std::size_t m = N + 2 * n;
    ComplexMatrix out(m, m);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) = yblock(i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out(N + i, N + j) = b2(i, j);
        out(N + n + i, N + n + j) = b3(i, j);
      }
    return out;
  };
  prob.F0 = embed(zN, zero, f0_third);
  for (std::size_t k = 0; k < N; ++k) {
    ComplexMatrix yb(N, N);
    yb(k, k) = 1.0;
    prob.Fi.push_back(embed(yb, proj_pt[k], proj_pt[k]));
  }

  // Strictly feasible pair: any componentwise-positive Y keeps every block
  // positive, and Z = diag(w I_N, u I_n, u I_n) with w + 2u = 1 matches
  // tr(F_k Z) = 1 (each PT'd projector has unit trace). Degenerate optimal
  // faces occasionally stall the final step, so a ladder of starts (and one
  // relaxed rung, still an order under the cross-check tolerance) is tried.
  auto make_init = [&](double y0, double w) {
    SdpInit init;
    init.x.assign(N, y0);
    const std::size_t m = N + 2 * n;
    ComplexMatrix z(m, m);
    for (std::size_t i = 0; i < N; ++i) z(i, i) = w;
    for (std::size_t i = 0; i < 2 * n; ++i) z(N + i, N + i) = 0.5 * (1.0 - w);
    init.Z = z;
    return init;
  };
  const struct {
    double y0, w, tol_scale;
  } rungs[] = {{1.0, 0.5, 1.0}, {4.0, 0.5, 1.0}, {1.0, 0.8, 1.0}, {2.0, 0.2, 3.0}};
  SdpSolution sol;
  for (const auto& rung : rungs) {
    SdpInit init = make_init(rung.y0, rung.w);
    sol = solve_sdp(prob, tol * rung.tol_scale, &init);
    if (sol.status == SdpStatus::optimal) break;
  }
  if (sol.status != SdpStatus::optimal)
    throw std::runtime_error("family_lp: diagonal SDP did not converge");

  double s = 0.0;
  std::array<double, N> y{};
  for (std::size_t k = 0; k < N; ++k) {
    y[k] = std::max(sol.x[k], 0.0);
    s += y[k];
  }
  if (s <= std::max(tol * 10.0, 1e-9)) {
    RobustnessResult r{0.0, rho, rho, RobustnessMethod::family_lp, {}, true, false};
    r.certificates["pseudomixture_residual"] = 0.0;
    return r;
  }
  std::array<double, N> dprime{}, prime{};
  for (std::size_t k = 0; k < N; ++k) {
    dprime[k] = y[k] / s;
    prime[k] = (p[k] + y[k]) / (1.0 + s);
  }
  DensityMatrix rho_pp = make_state(dprime);
  DensityMatrix rho_p = make_state(prime);
  RobustnessResult r{s, rho_p, rho_pp, RobustnessMethod::family_lp, {}, false, false};
  r.certificates["pseudomixture_residual"] = verify_pseudomixture(rho, rho_p, rho_pp, s);
  r.certificates["gap"] = sol.gap;
  r.certificates["slackness_residual"] = sol.slackness_residual;
  r.certificates["dual_feasibility_residual"] = sol.dual_feasibility_residual;
  return r;
}

// Root of f on [a, b] with f(a), f(b) of opposite sign; f increasing or
// decreasing, plain bisection.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double tol) {
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

RobustnessResult family_lp_one_param(const FamilyDescriptor& desc, double tol) {
  FamilyLine line = family_line(desc);
  const auto verdict = family_separable(desc);
  if (verdict.margin >= -kBoundaryTol) {
    DensityMatrix rho = family_state(desc);
    RobustnessResult r{0.0, rho, rho, RobustnessMethod::family_lp, {}, true, false};
    r.certificates["pseudomixture_residual"] = 0.0;
    return r;
  }

  const bool entangled_above = line.sep_below;
  auto raw_at = [&](double v) {
    ComplexMatrix m = line.base;
    ComplexMatrix sl = line.slope;
    sl *= v;
    m += sl;
    return m.hermitian_part();
  };
  auto pt_min_eig = [&](double v) {
    return min_eigenvalue(
        partial_transpose(raw_at(v), line.pt_cut[0], line.pt_cut[1], 1));
  };
  auto psd_min_eig = [&](double v) { return min_eigenvalue(raw_at(v)); };

  // Separability threshold from the PT spectrum where PPT decides the family
  // boundary; horo33's band structure hides it from PT, so the encoded value
  // is used there.
  double threshold;
  bool ppt_threshold = !std::holds_alternative<Horo33Params>(desc);
  if (ppt_threshold) {
    const double inside = entangled_above ? line.sep_lo : line.sep_hi;
    threshold = bisect_root(pt_min_eig, std::min(line.value, inside),
                            std::max(line.value, inside), tol * 1e-3);
  } else {
    threshold = line.sep_threshold;
  }

  // Far PSD endpoint on the separable side: walk outward from the threshold
  // until the spectrum goes negative, then bisect the face. The tiny shift
  // keeps the bracket sign-definite when the face eigenvalue rounds to +-0.
  auto shifted = [&](double v) { return psd_min_eig(v) + 1e-13; };
  const double dir = entangled_above ? -1.0 : 1.0;
  double inside_v = threshold;
  double step = std::max(1.0, std::abs(threshold));
  double outside_v = threshold + dir * step;
  int guard = 0;
  while (shifted(outside_v) > 0.0) {
    inside_v = outside_v;
    outside_v += dir * step;
    step *= 2.0;
    if (++guard > 60) throw std::runtime_error("family_lp: PSD face search stalled");
  }
  double far = bisect_root(shifted, std::min(inside_v, outside_v),
                           std::max(inside_v, outside_v), tol * 1e-3);

  const double s = std::abs(line.value - threshold) / std::abs(threshold - far);
  DensityMatrix rho = family_state(desc);
  DensityMatrix rho_p = line.state_at(threshold);
  DensityMatrix rho_pp = line.state_at(far);
  RobustnessResult r{s, rho_p, rho_pp, RobustnessMethod::family_lp, {}, false, false};
  r.certificates["pseudomixture_residual"] = verify_pseudomixture(rho, rho_p, rho_pp, s);
  r.certificates["witness_prime_margin"] = line_boundary_margin(line, threshold);
  r.certificates["witness_dprime_margin"] = line_boundary_margin(line, far);
  r.certificates["ppt_threshold_used"] = ppt_threshold ? 1.0 : 0.0;
  r.certificates["threshold"] = threshold;
  r.certificates["far_endpoint"] = far;
  return r;
}

}  // namespace

RobustnessResult robustness_family_lp(const FamilyDescriptor& desc, double tol) {
  if (const auto* b = std::get_if<BdParams>(&desc)) return family_lp_bd(*b, tol);
  if (const auto* i = std::get_if<IcdParams>(&desc)) {
    i->validate();
    auto basis_arr = icd_basis(i->theta);
    std::vector<std::vector<cplx>> basis(basis_arr.begin(), basis_arr.end());
    const double theta = i->theta;
    return family_lp_diag_sdp<4>(
        i->p, basis, 2, 2, icd_state(*i),
        [theta](const std::array<double, 4>& q) {
          return icd_state(IcdParams{theta, q});
        },
        1e-9);
  }
  if (const auto* b23 = std::get_if<Bd23Params>(&desc)) {
    b23->validate();
    auto basis_arr = bd23_basis();
    std::vector<std::vector<cplx>> basis(basis_arr.begin(), basis_arr.end());
    return family_lp_diag_sdp<6>(
        b23->p, basis, 2, 3, bd23_state(*b23),
        [](const std::array<double, 6>& q) { return bd23_state(Bd23Params{q}); },
        1e-9);
  }
  return family_lp_one_param(desc, tol);
}

double lambda_hat_sdp(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                      double tol) {
  SdpProblem prob;
  prob.c = {-1.0};
  prob.F0 = rho_prime.matrix();
  prob.Fi = {-1.0 * rho.matrix()};
  SdpSolution sol;
  ComplexMatrix L;
  if (cholesky(rho_prime.matrix(), L)) {
    SdpInit init;
    init.x = {0.0};
    init.Z = ComplexMatrix::identity(rho.order());  // tr(rho Z) = 1 = -c
    sol = solve_sdp(prob, tol, &init);
  } else {
    sol = solve_sdp(prob, tol);  // rho' singular: infeasible start
  }
  if (sol.status != SdpStatus::optimal)
    throw std::runtime_error("lambda_hat_sdp: solver did not converge");
  return -sol.p_star;
}

}  // namespace entrobust
