// SPDX-License-Identifier: Apache-2.0
#include "entrobust/states.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entrobust {

namespace {

const double kPi = 3.14159265358979323846;

void check_probs(const double* p, std::size_t k) {
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(p[i] >= 0.0) || p[i] > 1.0 + kProbSumTol)
      throw std::invalid_argument("probability out of [0,1]");
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > kProbSumTol)
    throw std::invalid_argument("probabilities do not sum to 1");
}

DensityMatrix mixture(const std::vector<cplx>* basis, const double* p, std::size_t k,
                      std::vector<std::size_t> dims) {
  ComplexMatrix m(basis[0].size(), basis[0].size());
  for (std::size_t i = 0; i < k; ++i) {
    if (p[i] == 0.0) continue;
    m += p[i] * outer(basis[i], basis[i]);
  }
  return DensityMatrix(m.hermitian_part(), std::move(dims));
}

}  // namespace

void BdParams::validate() const { check_probs(p.data(), 4); }

void IcdParams::validate() const {
  if (!(theta > 0.0 && theta < kPi / 2.0))
    throw std::invalid_argument("icd: theta outside (0, pi/2)");
  check_probs(p.data(), 4);
}

void Bd23Params::validate() const { check_probs(p.data(), 6); }

void WernerParams::validate() const {
  if (d < 2) throw std::invalid_argument("werner: d < 2");
  if (d * d > kMaxOrder) throw std::invalid_argument("werner: order > 64");
  if (!(f >= -1.0 && f <= 1.0)) throw std::invalid_argument("werner: f outside [-1,1]");
}

void IsotropicParams::validate() const {
  if (d < 2) throw std::invalid_argument("isotropic: d < 2");
  if (d * d > kMaxOrder) throw std::invalid_argument("isotropic: order > 64");
  if (!(big_f >= 0.0 && big_f <= 1.0))
    throw std::invalid_argument("isotropic: F outside [0,1]");
}

void Horo33Params::validate() const {
  if (!(alpha >= 2.0 && alpha <= 5.0))
    throw std::invalid_argument("horo33: alpha outside [2,5]");
}

void MultiIsoParams::validate() const {
  if (d < 2 || n < 2) throw std::invalid_argument("multi_iso: need d >= 2, n >= 2");
  std::size_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= d;
    if (order > kMaxOrder) throw std::invalid_argument("multi_iso: order > 64");
  }
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("multi_iso: r outside [0,1]");
}

double MultiIsoParams::r0() const {
  double dn1 = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) dn1 *= static_cast<double>(d);
  return 1.0 / (1.0 + dn1);
}

std::string family_name(const FamilyDescriptor& desc) {
  struct Visitor {
    std::string operator()(const BdParams&) const { return "bd"; }
    std::string operator()(const IcdParams&) const { return "icd"; }
    std::string operator()(const Bd23Params&) const { return "bd23"; }
    std::string operator()(const WernerParams&) const { return "werner"; }
    std::string operator()(const IsotropicParams&) const { return "isotropic"; }
    std::string operator()(const Horo33Params&) const { return "horo33"; }
    std::string operator()(const MultiIsoParams&) const { return "multiiso"; }
  };
  return std::visit(Visitor{}, desc);
}

std::array<std::vector<cplx>, 4> bell_basis_2x2() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{{s, 0, 0, s}, {s, 0, 0, -s}, {0, s, s, 0}, {0, s, -s, 0}}};
}

std::array<std::vector<cplx>, 4> icd_basis(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {{{c, 0, 0, s}, {s, 0, 0, -c}, {0, c, s, 0}, {0, s, -c, 0}}};
}

std::array<std::vector<cplx>, 6> bd23_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  auto v = [&](std::size_t a, std::size_t b, double sign) {
    std::vector<cplx> x(6, cplx(0.0, 0.0));
    x[a] = s;
    x[b] = sign * s;
    return x;
  };
  // pairs (|00>,|11>), (|01>,|12>), (|02>,|10>) in the 2x3 lexicographic basis
  return {{v(0, 4, 1), v(0, 4, -1), v(1, 5, 1), v(1, 5, -1), v(2, 3, 1), v(2, 3, -1)}};
}

std::array<double, 3> bd_t_from_p(const std::array<double, 4>& p) {
  return {p[0] - p[1] + p[2] - p[3], -p[0] + p[1] + p[2] - p[3],
          p[0] + p[1] - p[2] - p[3]};
}

DensityMatrix bd_state(const BdParams& params) {
  params.validate();
  auto basis = bell_basis_2x2();
  return mixture(basis.data(), params.p.data(), 4, {2, 2});
}

DensityMatrix icd_state(const IcdParams& params) {
  params.validate();
  auto basis = icd_basis(params.theta);
  return mixture(basis.data(), params.p.data(), 4, {2, 2});
}

DensityMatrix bd23_state(const Bd23Params& params) {
  params.validate();
  auto basis = bd23_basis();
  return mixture(basis.data(), params.p.data(), 6, {2, 3});
}

ComplexMatrix flip_operator(std::size_t d) {
  ComplexMatrix f(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

std::vector<cplx> max_entangled(std::size_t d, std::size_t n) {
  std::size_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= d;
  std::vector<cplx> v(order, cplx(0.0, 0.0));
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) idx = idx * d + i;
    v[idx] = a;
  }
  return v;
}

DensityMatrix werner(const WernerParams& params) {
  params.validate();
  const double d = static_cast<double>(params.d);
  ComplexMatrix m = (1.0 / (d * d * d - d)) *
                    ((d - params.f) * ComplexMatrix::identity(params.d * params.d) +
                     (d * params.f - 1.0) * flip_operator(params.d));
  return DensityMatrix(m.hermitian_part(), {params.d, params.d});
}

DensityMatrix isotropic(const IsotropicParams& params) {
  params.validate();
  const double d = static_cast<double>(params.d);
  auto psi = max_entangled(params.d);
  ComplexMatrix proj = outer(psi, psi);
  ComplexMatrix m =
      ((1.0 - params.big_f) / (d * d - 1.0)) *
          (ComplexMatrix::identity(params.d * params.d) - proj) +
      params.big_f * proj;
  return DensityMatrix(m.hermitian_part(), {params.d, params.d});
}

DensityMatrix horo33(const Horo33Params& params) {
  params.validate();
  auto psi = max_entangled(3);
  ComplexMatrix proj = outer(psi, psi);
  auto diag_proj = [](std::size_t i, std::size_t j) {
    std::vector<cplx> v(9, cplx(0.0, 0.0));
    v[3 * i + j] = 1.0;
    return outer(v, v);
  };
  ComplexMatrix sp = (1.0 / 3.0) * (diag_proj(0, 1) + diag_proj(1, 2) + diag_proj(2, 0));
  ComplexMatrix sm = (1.0 / 3.0) * (diag_proj(1, 0) + diag_proj(2, 1) + diag_proj(0, 2));
  ComplexMatrix m = (2.0 / 7.0) * proj + (params.alpha / 7.0) * sp +
                    ((5.0 - params.alpha) / 7.0) * sm;
  return DensityMatrix(m.hermitian_part(), {3, 3});
}

DensityMatrix multi_isotropic(const MultiIsoParams& params) {
  params.validate();
  std::size_t order = 1;
  for (std::size_t i = 0; i < params.n; ++i) order *= params.d;
  auto psi = max_entangled(params.d, params.n);
  ComplexMatrix m = ((1.0 - params.r) / static_cast<double>(order)) *
                        ComplexMatrix::identity(order) +
                    params.r * outer(psi, psi);
  return DensityMatrix(m.hermitian_part(), std::vector<std::size_t>(params.n, params.d));
}

DensityMatrix family_state(const FamilyDescriptor& desc) {
  struct Visitor {
    DensityMatrix operator()(const BdParams& p) const { return bd_state(p); }
    DensityMatrix operator()(const IcdParams& p) const { return icd_state(p); }
    DensityMatrix operator()(const Bd23Params& p) const { return bd23_state(p); }
    DensityMatrix operator()(const WernerParams& p) const { return werner(p); }
    DensityMatrix operator()(const IsotropicParams& p) const { return isotropic(p); }
    DensityMatrix operator()(const Horo33Params& p) const { return horo33(p); }
    DensityMatrix operator()(const MultiIsoParams& p) const { return multi_isotropic(p); }
  };
  return std::visit(Visitor{}, desc);
}

DensityMatrix FamilyLine::state_at(double v) const {
  ComplexMatrix m = base;
  ComplexMatrix sl = slope;
  sl *= v;
  m += sl;
  return DensityMatrix(m.hermitian_part(), dims);
}

FamilyLine family_line(const FamilyDescriptor& desc) {
  FamilyLine line;
  if (const auto* w = std::get_if<WernerParams>(&desc)) {
    w->validate();
    auto at = [&](double f) { return werner({w->d, f}).matrix(); };
    line.base = at(0.0);
    line.slope = at(1.0) - at(0.0);
    line.dims = {w->d, w->d};
    line.lo = -1.0;
    line.hi = 1.0;
    line.psd_lo = -1.0;
    line.psd_hi = 1.0;
    line.sep_lo = 0.0;
    line.sep_hi = 1.0;
    line.sep_threshold = 0.0;
    line.sep_below = false;  // separable iff f >= 0
    line.value = w->f;
    line.pt_cut = {w->d, w->d};
  } else if (const auto* i = std::get_if<IsotropicParams>(&desc)) {
    i->validate();
    auto at = [&](double F) { return isotropic({i->d, F}).matrix(); };
    line.base = at(0.0);
    line.slope = at(1.0) - at(0.0);
    line.dims = {i->d, i->d};
    line.lo = 0.0;
    line.hi = 1.0;
    line.psd_lo = 0.0;
    line.psd_hi = 1.0;
    line.sep_lo = 0.0;
    line.sep_hi = 1.0 / static_cast<double>(i->d);
    line.sep_threshold = line.sep_hi;
    line.sep_below = true;  // separable iff F <= 1/d
    line.value = i->big_f;
    line.pt_cut = {i->d, i->d};
  } else if (const auto* h = std::get_if<Horo33Params>(&desc)) {
    h->validate();
    ComplexMatrix a2 = horo33({2.0}).matrix();
    ComplexMatrix a3 = horo33({3.0}).matrix();
    line.slope = a3 - a2;
    line.base = a2 - 2.0 * line.slope;
    line.dims = {3, 3};
    line.lo = 2.0;
    line.hi = 5.0;
    line.psd_lo = 0.0;
    line.psd_hi = 5.0;
    line.sep_lo = 2.0;
    line.sep_hi = 3.0;
    line.sep_threshold = 3.0;
    line.sep_below = true;  // separable iff alpha <= 3 (within [2,5])
    line.value = h->alpha;
    line.pt_cut = {3, 3};
  } else if (const auto* m = std::get_if<MultiIsoParams>(&desc)) {
    m->validate();
    MultiIsoParams q0 = *m, q1 = *m;
    q0.r = 0.0;
    q1.r = 1.0;
    ComplexMatrix m0 = multi_isotropic(q0).matrix();
    ComplexMatrix m1 = multi_isotropic(q1).matrix();
    line.base = m0;
    line.slope = m1 - m0;
    line.dims = std::vector<std::size_t>(m->n, m->d);
    double order = 1.0;
    for (std::size_t i = 0; i < m->n; ++i) order *= static_cast<double>(m->d);
    double dn1 = order / static_cast<double>(m->d);
    line.lo = 0.0;
    line.hi = 1.0;
    line.psd_lo = 1.0 / (1.0 - order);
    line.psd_hi = 1.0;
    line.sep_lo = 0.0;
    line.sep_hi = m->r0();
    line.sep_threshold = line.sep_hi;
    line.sep_below = true;  // separable iff r <= r0
    line.value = m->r;
    line.pt_cut = {m->d, static_cast<std::size_t>(dn1 + 0.5)};
  } else {
    throw std::invalid_argument("family_line: not a one-parameter family");
  }
  return line;
}

}  // namespace entrobust
