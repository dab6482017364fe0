// SPDX-License-Identifier: Apache-2.0
#include "entrobust/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "entrobust/sampling.hpp"
#include "entrobust/separability.hpp"

namespace entrobust {

std::string method_name(RobustnessMethod m) {
  switch (m) {
    case RobustnessMethod::analytic:
      return "analytic";
    case RobustnessMethod::sdp:
      return "sdp";
    case RobustnessMethod::family_lp:
      return "lp";
  }
  return "unknown";
}

double verify_pseudomixture(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                            const DensityMatrix& rho_dprime, double s) {
  ComplexMatrix r = (1.0 + s) * rho_prime.matrix();
  r -= s * rho_dprime.matrix();
  r -= rho.matrix();
  return r.frobenius_norm();
}

namespace {

RobustnessResult separable_result(const DensityMatrix& rho, RobustnessMethod method) {
  RobustnessResult r{0.0, rho, rho, method, {}, true, false};
  r.certificates["pseudomixture_residual"] = 0.0;
  return r;
}

}  // namespace

RobustnessResult robustness_bd(const BdParams& params) {
  params.validate();
  const auto verdict = bd_separable(params);
  if (verdict.margin >= -kBoundaryTol)
    return separable_result(bd_state(params), RobustnessMethod::analytic);

  std::array<std::size_t, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return params.p[a] > params.p[b]; });
  const double p1 = params.p[idx[0]];
  const double s = 2.0 * p1 - 1.0;

  // rho'' on the far octahedron face (dominant component zero, barycenter of
  // the three admissible vertices); rho' is then forced to the p'=1/2 plane.
  BdParams dprime{}, prime{};
  for (std::size_t k = 0; k < 4; ++k) dprime.p[idx[k]] = k == 0 ? 0.0 : 1.0 / 3.0;
  for (std::size_t k = 0; k < 4; ++k)
    prime.p[k] = (params.p[k] + s * dprime.p[k]) / (1.0 + s);

  DensityMatrix rho = bd_state(params);
  DensityMatrix rho_p = bd_state(prime);
  DensityMatrix rho_pp = bd_state(dprime);

  RobustnessResult r{s, rho_p, rho_pp, RobustnessMethod::analytic, {}, false, false};
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

WitnessPlan frame_witness_plan(const std::array<double, 4>& K) {
  static const std::array<std::array<std::size_t, 2>, 3> pairs{
      {{1, 2}, {1, 3}, {2, 3}}};
  WitnessPlan plan;
  std::size_t best = 0;
  for (std::size_t q = 1; q < 3; ++q)
    if (K[pairs[q][0]] + K[pairs[q][1]] < K[pairs[best][0]] + K[pairs[best][1]])
      best = q;
  plan.plane = best;
  plan.weights[best] = 1.0;
  plan.pair = pairs[best];
  return plan;
}

namespace {

// Common tail of the x'-frame construction: sigma_k from the minimizing pair,
// rho' from the pseudomixture, boundary certificates from the decomposition
// of rho'.
RobustnessResult frame_construction(const DensityMatrix& rho,
                                    const std::array<double, 4>& lambda,
                                    const std::array<double, 4>& K,
                                    const std::array<std::vector<cplx>, 4>& x,
                                    double concurrence, RobustnessMethod method) {
  const WitnessPlan plan = frame_witness_plan(K);
  const std::size_t i = plan.pair[0], j = plan.pair[1];
  const double ksum = K[i] + K[j];
  const double s = 0.5 * concurrence * ksum;

  auto xprime = [&](std::size_t k) {
    std::vector<cplx> v = x[k];
    const double f = 1.0 / std::sqrt(lambda[k]);
    for (auto& e : v) e *= f;
    return v;
  };
  ComplexMatrix sigma = outer(xprime(i), xprime(i)) + outer(xprime(j), xprime(j));
  sigma *= 1.0 / ksum;
  DensityMatrix rho_pp(sigma.hermitian_part(), {2, 2});

  ComplexMatrix mix = rho.matrix() + s * rho_pp.matrix();
  mix *= 1.0 / (1.0 + s);
  DensityMatrix rho_p(mix.hermitian_part(), {2, 2});

  RobustnessResult r{s, rho_p, rho_pp, method, {}, false, false};
  r.certificates["pseudomixture_residual"] =
      verify_pseudomixture(rho, rho_p, rho_pp, s);

  WoottersData prime = wootters_decompose(rho_p);
  r.certificates["witness_prime_boundary_residual"] =
      std::abs(prime.lambda[0] - prime.lambda[1] - prime.lambda[2] - prime.lambda[3]);
  r.certificates["witness_prime_concurrence"] = prime.concurrence;
  // coefficient of rho'' along the dominant frame direction
  std::vector<cplx> xt1 = spin_flip(xprime(0));
  r.certificates["witness_dprime_lambda1"] =
      inner(xt1, mat_vec(rho_pp.matrix(), xt1)).real();
  r.certificates["witness_plane"] = static_cast<double>(plan.plane);
  return r;
}

}  // namespace

RobustnessResult robustness_wootters(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<std::size_t>{2, 2})
    throw std::invalid_argument("robustness_wootters: dims must be [2,2]");
  WoottersData wd = wootters_decompose(rho);
  if (wd.concurrence <= 0.0) return separable_result(rho, RobustnessMethod::analytic);
  if (!wd.k_available)
    throw std::invalid_argument(
        "robustness_wootters: rank-deficient state (lambda_4 < 1e-10); use the SDP path");
  return frame_construction(rho, wd.lambda, wd.K, wd.x, wd.concurrence,
                            RobustnessMethod::analytic);
}

IcdSpectrum icd_spectrum(const IcdParams& params) {
  params.validate();
  const double S = std::sin(2.0 * params.theta);
  const double C2 = std::cos(2.0 * params.theta);
  const auto& p = params.p;
  auto basis = icd_basis(params.theta);

  struct Entry {
    double lambda;
    double norm2;  // <x|x>
    std::vector<cplx> x;
  };
  std::array<Entry, 4> entries;

  // One 2x2 sector: subnormalized eigenvectors w = sqrt(p) phi, tilde-overlap
  // tau = [[tau11, g],[g, tau22]], Takagi values |d| with the eigenvector of
  // tau at d giving the recombination weights; an i phase flips negative d to
  // a positive tilde norm.
  auto sector = [&](double pa, double pb, const std::vector<cplx>& phi_a,
                    const std::vector<cplx>& phi_b, double tau11, double tau22,
                    double g, Entry* out) {
    const double mean = 0.5 * (tau11 + tau22);
    const double dev = std::sqrt(0.25 * (tau11 - tau22) * (tau11 - tau22) + g * g);
    const double d[2] = {mean + dev, mean - dev};
    for (int q = 0; q < 2; ++q) {
      // eigenvector of [[tau11, g],[g, tau22]] at d[q]; take the better
      // conditioned of the two analytic directions
      double v1 = g, v2 = d[q] - tau11;
      const double w1 = d[q] - tau22, w2 = g;
      if (w1 * w1 + w2 * w2 > v1 * v1 + v2 * v2) {
        v1 = w1;
        v2 = w2;
      }
      const double nrm = std::sqrt(v1 * v1 + v2 * v2);
      Entry e;
      if (nrm < 1e-150) {  // empty sector
        e.lambda = 0.0;
        e.norm2 = 0.0;
        e.x.assign(4, cplx(0.0, 0.0));
        out[q] = e;
        continue;
      }
      v1 /= nrm;
      v2 /= nrm;
      e.lambda = std::abs(d[q]);
      e.norm2 = v1 * v1 * pa + v2 * v2 * pb;
      const cplx phase = d[q] < 0.0 ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
      e.x.assign(4, cplx(0.0, 0.0));
      const double sa = std::sqrt(pa), sb = std::sqrt(pb);
      for (std::size_t k = 0; k < 4; ++k)
        e.x[k] = phase * (v1 * sa * phi_a[k] + v2 * sb * phi_b[k]);
      out[q] = e;
    }
  };

  sector(p[0], p[1], basis[0], basis[1], -p[0] * S, p[1] * S,
         std::sqrt(p[0] * p[1]) * C2, entries.data());
  sector(p[2], p[3], basis[2], basis[3], p[2] * S, -p[3] * S,
         -std::sqrt(p[2] * p[3]) * C2, entries.data() + 2);

  std::array<std::size_t, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return entries[a].lambda > entries[b].lambda;
  });

  IcdSpectrum spec;
  for (std::size_t k = 0; k < 4; ++k) {
    const Entry& e = entries[idx[k]];
    spec.lambda[k] = e.lambda;
    spec.K[k] = e.lambda > kRankTol ? e.norm2 / e.lambda : 0.0;
    spec.x[k] = e.x;
  }
  return spec;
}

RobustnessResult robustness_icd(const IcdParams& params) {
  params.validate();
  const auto verdict = icd_separable(params);
  if (verdict.margin >= -kBoundaryTol)
    return separable_result(icd_state(params), RobustnessMethod::analytic);

  IcdSpectrum spec = icd_spectrum(params);
  if (spec.lambda[3] < kRankTol)
    throw std::invalid_argument(
        "robustness_icd: rank-deficient state (lambda_4 < 1e-10); use the SDP path");
  const double C =
      spec.lambda[0] - spec.lambda[1] - spec.lambda[2] - spec.lambda[3];
  if (C <= 0.0)  // should not happen for an entangled verdict
    return separable_result(icd_state(params), RobustnessMethod::analytic);

  DensityMatrix rho = icd_state(params);
  RobustnessResult r = frame_construction(rho, spec.lambda, spec.K, spec.x, C,
                                          RobustnessMethod::analytic);
  // cross-validation of the closed-form spectrum against the generic route
  WoottersData wd = wootters_decompose(rho);
  double lam_dev = 0.0;
  for (std::size_t k = 0; k < 4; ++k)
    lam_dev = std::max(lam_dev, std::abs(wd.lambda[k] - spec.lambda[k]));
  r.certificates["spectrum_cross_check"] = lam_dev;
  return r;
}

double bd23_closed_form_candidate(const std::array<double, 6>& p) {
  const double num =
      (p[0] - p[1]) * (p[0] - p[1]) - (p[2] + p[3]) * (p[4] + p[5]);
  const double inner = (2.0 * p[0] - 1.0) * (2.0 * p[0] - 1.0) + 3.0 * num;
  return 3.0 * num / (2.0 * (std::sqrt(inner) - (2.0 * p[1] - 1.0)));
}

namespace {

// Inner feasibility value for the bd23 chamber problem at mixing weight s:
// the best achievable right-hand side
//   G = sqrt((Pa + s a)(Pb + s b)) + s * min(1 - a - b, sqrt(ab))
// over pair sums a, b >= 0, a + b <= 1 of the mixed-in diagonal separable
// state. Feasible iff G >= p1 - p2.
struct Bd23Inner {
  double pa, pb, s;

  double curve_at(double y) const {
    const double t = std::exp(y);
    const double m = 1.0 / (1.0 + t + 1.0 / t);
    const double a = m * t, b = m / t;
    return std::sqrt((pa + s * a) * (pb + s * b)) + s * m;
  }

  // max over the face sqrt(ab) = 1-a-b, parametrized by y = log(a/b)/... t
  double curve_max(double* arg_a, double* arg_b) const {
    const double lo = -40.0, hi = 40.0;
    const int grid = 400;
    double best = -1e300, besty = 0.0;
    for (int k = 0; k <= grid; ++k) {
      const double y = lo + (hi - lo) * k / grid;
      const double v = curve_at(y);
      if (v > best) {
        best = v;
        besty = y;
      }
    }
    double a = besty - (hi - lo) / grid, b = besty + (hi - lo) / grid;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = curve_at(x1), f2 = curve_at(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = curve_at(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = curve_at(x1);
      }
    }
    const double y = 0.5 * (a + b);
    const double t = std::exp(y);
    const double m = 1.0 / (1.0 + t + 1.0 / t);
    if (arg_a) *arg_a = m * t;
    if (arg_b) *arg_b = m / t;
    return curve_at(y);
  }

  // max over the a+b = 1 edge (closed form: quadratic under the root)
  double edge_max(double* arg_a, double* arg_b) const {
    auto val = [&](double a) {
      return std::sqrt(std::max(0.0, (pa + s * a) * (pb + s * (1.0 - a))));
    };
    double best_a = 0.0;
    if (s > 0.0) best_a = std::clamp((pb - pa + s) / (2.0 * s), 0.0, 1.0);
    double best = val(best_a);
    for (double cand : {0.0, 1.0})
      if (val(cand) > best) {
        best = val(cand);
        best_a = cand;
      }
    if (arg_a) *arg_a = best_a;
    if (arg_b) *arg_b = 1.0 - best_a;
    return best;
  }

  double max_value(double* arg_a, double* arg_b) const {
    double ca, cb, ea, eb;
    const double cv = curve_max(&ca, &cb);
    const double ev = edge_max(&ea, &eb);
    if (cv >= ev) {
      if (arg_a) *arg_a = ca;
      if (arg_b) *arg_b = cb;
      return cv;
    }
    if (arg_a) *arg_a = ea;
    if (arg_b) *arg_b = eb;
    return ev;
  }
};

void bd23_check_chamber(const std::array<double, 6>& p) {
  if (p[0] < p[1] || p[2] < p[3] || p[4] < p[5])
    throw std::invalid_argument("bd23: pairs must be ordered descending");
  const double pa = p[2] + p[3], pb = p[4] + p[5], px = p[0] + p[1];
  if ((p[2] - p[3]) * (p[2] - p[3]) > pb * px + kBoundaryTol ||
      (p[4] - p[5]) * (p[4] - p[5]) > px * pa + kBoundaryTol)
    throw std::invalid_argument("bd23: outside the first-pair chamber");
}

}  // namespace

double bd23_diag_robustness(const std::array<double, 6>& p_sorted, Bd23Witness* witness) {
  bd23_check_chamber(p_sorted);
  const double delta = p_sorted[0] - p_sorted[1];
  const double pa = p_sorted[2] + p_sorted[3], pb = p_sorted[4] + p_sorted[5];
  if (delta <= std::sqrt(pa * pb) + kBoundaryTol) return 0.0;

  auto feasible = [&](double s) {
    Bd23Inner inner{pa, pb, s};
    return inner.max_value(nullptr, nullptr) >= delta;
  };
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (!feasible(hi)) {
    hi *= 2.0;
    if (++guard > 6) throw std::runtime_error("bd23: bisection bracket exceeded 12");
  }
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  const double s = hi;

  if (witness) {
    Bd23Inner inner{pa, pb, s};
    double a, b;
    inner.max_value(&a, &b);
    const double x = std::max(0.0, 1.0 - a - b);
    const double u = -std::min(x, std::sqrt(a * b));
    witness->a = a;
    witness->b = b;
    witness->p_dprime = {0.5 * (x + u), 0.5 * (x - u), 0.5 * a,
                         0.5 * a,       0.5 * b,       0.5 * b};
    for (std::size_t k = 0; k < 6; ++k)
      witness->p_prime[k] =
          (p_sorted[k] + s * witness->p_dprime[k]) / (1.0 + s);
  }
  return s;
}

double bd23_e13_denominator_max(const std::array<double, 6>& p_sorted,
                                std::uint64_t seed, int restarts) {
  bd23_check_chamber(p_sorted);
  const double delta = p_sorted[0] - p_sorted[1];
  const double pa = p_sorted[2] + p_sorted[3], pb = p_sorted[4] + p_sorted[5];
  const double num = delta * delta - pa * pb;
  if (num <= 0.0) return 0.0;

  // D(a,b) = Pa b + Pb a + 2 delta sqrt(ab) over a,b >= 0 with
  // h(a,b) = a + b + sqrt(ab) <= 1 (the mixed-in state on the exit face of
  // the separable set, second component dominant). Both D and h increase
  // along every coordinate, so the maximum sits on h = 1; once there the
  // ascent direction is the gradient projected on the tangent of h (h is
  // homogeneous, so the retraction is a radial rescale).
  auto dval = [&](double a, double b) {
    return pa * b + pb * a + 2.0 * delta * std::sqrt(std::max(a * b, 0.0));
  };
  auto hval = [&](double a, double b) {
    return a + b + std::sqrt(std::max(a * b, 0.0));
  };
  auto project = [&](double& a, double& b) {
    a = std::max(a, 0.0);
    b = std::max(b, 0.0);
    const double h = hval(a, b);
    if (h > 1.0) {
      a /= h;
      b /= h;
    }
  };

  Rng rng(seed);
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    double a = 1e-3 + rng.uniform(), b = 1e-3 + rng.uniform();
    project(a, b);
    double cur = dval(a, b);
    for (int it = 0; it < 2000; ++it) {
      const double sa = std::sqrt(std::max(a, 1e-18));
      const double sb = std::sqrt(std::max(b, 1e-18));
      double ga = pb + delta * sb / sa;
      double gb = pa + delta * sa / sb;
      if (hval(a, b) >= 1.0 - 1e-12) {
        const double ha = 1.0 + 0.5 * sb / sa;  // grad h
        const double hb = 1.0 + 0.5 * sa / sb;
        const double coef = (ga * ha + gb * hb) / (ha * ha + hb * hb);
        ga -= coef * ha;
        gb -= coef * hb;
      }
      const double gnorm = std::sqrt(ga * ga + gb * gb);
      if (gnorm < 1e-12) break;
      double step = 0.5;
      bool moved = false;
      while (step > 1e-16) {
        double na = a + step * ga, nb = b + step * gb;
        project(na, nb);
        const double nv = dval(na, nb);
        if (nv > cur) {
          a = na;
          b = nb;
          cur = nv;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    best = std::max(best, cur);
  }
  return num / best;
}

RobustnessResult robustness_bd23(const Bd23Params& params) {
  params.validate();
  const auto verdict = bd23_separable(params);
  if (verdict.margin >= -kBoundaryTol)
    return separable_result(bd23_state(params), RobustnessMethod::analytic);

  // Conventional ordering: descending within pairs, violated pair first.
  std::array<std::size_t, 6> perm{0, 1, 2, 3, 4, 5};
  auto p = params.p;
  for (std::size_t q = 0; q < 3; ++q)
    if (p[2 * q] < p[2 * q + 1]) {
      std::swap(p[2 * q], p[2 * q + 1]);
      std::swap(perm[2 * q], perm[2 * q + 1]);
    }
  auto pair_margin = [&](std::size_t q) {
    const std::size_t r1 = (q + 1) % 3, r2 = (q + 2) % 3;
    const double other =
        (p[2 * r1] + p[2 * r1 + 1]) * (p[2 * r2] + p[2 * r2 + 1]);
    return std::sqrt(other) - (p[2 * q] - p[2 * q + 1]);
  };
  std::size_t violated = 3;
  for (std::size_t q = 0; q < 3; ++q)
    if (pair_margin(q) < -kBoundaryTol) {
      if (violated != 3)
        throw std::invalid_argument(
            "robustness_bd23: more than one pair condition violated");
      violated = q;
    }
  if (violated == 3)
    return separable_result(bd23_state(params), RobustnessMethod::analytic);
  if (violated != 0) {
    for (std::size_t k = 0; k < 2; ++k) {
      std::swap(p[k], p[2 * violated + k]);
      std::swap(perm[k], perm[2 * violated + k]);
    }
  }

  Bd23Witness w;
  const double s = bd23_diag_robustness(p, &w);

  Bd23Params prime{}, dprime{};
  for (std::size_t k = 0; k < 6; ++k) {
    prime.p[perm[k]] = w.p_prime[k];
    dprime.p[perm[k]] = w.p_dprime[k];
  }
  DensityMatrix rho = bd23_state(params);
  DensityMatrix rho_p = bd23_state(prime);
  DensityMatrix rho_pp = bd23_state(dprime);

  RobustnessResult r{s, rho_p, rho_pp, RobustnessMethod::analytic, {}, false, false};
  r.certificates["pseudomixture_residual"] = verify_pseudomixture(rho, rho_p, rho_pp, s);
  r.certificates["witness_prime_margin"] = family_boundary_margin(FamilyDescriptor{prime});
  r.certificates["witness_dprime_margin"] =
      family_boundary_margin(FamilyDescriptor{dprime});
  r.certificates["exit_face_maximizer_agreement"] =
      std::abs(bd23_e13_denominator_max(p, 20240915ull) - s);
  r.certificates["closed_form_candidate"] = bd23_closed_form_candidate(p);
  return r;
}

namespace {

RobustnessResult one_param_robustness(const FamilyDescriptor& desc) {
  FamilyLine line = family_line(desc);
  const auto verdict = family_separable(desc);
  if (verdict.margin >= -kBoundaryTol)
    return separable_result(family_state(desc), RobustnessMethod::analytic);

  const bool entangled_above = line.sep_below;
  const double t = line.sep_threshold;
  const double far = entangled_above ? line.psd_lo : line.psd_hi;
  const double s = std::abs(line.value - t) / std::abs(t - far);

  DensityMatrix rho = family_state(desc);
  DensityMatrix rho_p = line.state_at(t);
  DensityMatrix rho_pp = line.state_at(far);

  RobustnessResult r{s, rho_p, rho_pp, RobustnessMethod::analytic, {}, false, false};
  r.certificates["pseudomixture_residual"] = verify_pseudomixture(rho, rho_p, rho_pp, s);
  r.certificates["witness_prime_margin"] = line_boundary_margin(line, t);
  r.certificates["witness_dprime_margin"] = line_boundary_margin(line, far);
  // signed distance of the mixed-in state to the stated separable interval,
  // in parameter units (negative when the formal extension exits it)
  double sep_margin;
  if (far < line.sep_lo)
    sep_margin = far - line.sep_lo;
  else if (far > line.sep_hi)
    sep_margin = line.sep_hi - far;
  else
    sep_margin = std::min(far - line.sep_lo, line.sep_hi - far);
  r.certificates["witness_dprime_sep_margin"] = sep_margin;
  return r;
}

}  // namespace

RobustnessResult robustness_werner(const WernerParams& params) {
  return one_param_robustness(FamilyDescriptor{params});
}

RobustnessResult robustness_isotropic(const IsotropicParams& params) {
  return one_param_robustness(FamilyDescriptor{params});
}

RobustnessResult robustness_horo33(const Horo33Params& params) {
  return one_param_robustness(FamilyDescriptor{params});
}

RobustnessResult robustness_multi_iso(const MultiIsoParams& params) {
  return one_param_robustness(FamilyDescriptor{params});
}

RobustnessResult robustness_analytic(const FamilyDescriptor& desc) {
  if (const auto* b = std::get_if<BdParams>(&desc)) return robustness_bd(*b);
  if (const auto* i = std::get_if<IcdParams>(&desc)) return robustness_icd(*i);
  if (const auto* b23 = std::get_if<Bd23Params>(&desc)) return robustness_bd23(*b23);
  return one_param_robustness(desc);
}

}  // namespace entrobust
