// SPDX-License-Identifier: Apache-2.0
#include "entrobust/separability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrobust {

namespace {

bool ppt_decides(const std::vector<std::size_t>& dims) {
  if (dims.size() != 2) return false;
  auto lo = std::min(dims[0], dims[1]);
  auto hi = std::max(dims[0], dims[1]);
  return lo == 2 && (hi == 2 || hi == 3);
}

}  // namespace

SeparabilityVerdict is_ppt(const DensityMatrix& rho) {
  if (!rho.bipartite())
    throw std::invalid_argument("is_ppt: bipartite dims required");
  SeparabilityVerdict v;
  v.margin = min_eigenvalue(partial_transpose(rho));
  v.separable = v.margin >= -kPsdTol;
  v.binding = "pt_min_eig";
  v.ppt_exact = ppt_decides(rho.dims());
  return v;
}

SeparabilityVerdict bd_separable(const BdParams& params) {
  params.validate();
  SeparabilityVerdict v;
  const double pmax = *std::max_element(params.p.begin(), params.p.end());
  v.margin = 0.5 - pmax;
  v.separable = v.margin >= -kBoundaryTol;
  v.binding = "p_max";
  v.ppt_exact = true;
  return v;
}

SeparabilityVerdict icd_separable(const IcdParams& params) {
  params.validate();
  const double s2 = std::sin(2.0 * params.theta);
  const double inv = 1.0 / (s2 * s2);
  const auto& p = params.p;
  const double bound12 =
      std::sqrt(4.0 * p[2] * p[3] * inv + (p[2] - p[3]) * (p[2] - p[3]));
  const double bound34 =
      std::sqrt(4.0 * p[0] * p[1] * inv + (p[0] - p[1]) * (p[0] - p[1]));
  const double m12 = bound12 - std::abs(p[0] - p[1]);
  const double m34 = bound34 - std::abs(p[2] - p[3]);
  SeparabilityVerdict v;
  if (m12 <= m34) {
    v.margin = m12;
    v.binding = "pair12";
  } else {
    v.margin = m34;
    v.binding = "pair34";
  }
  v.separable = v.margin >= -kBoundaryTol;
  v.ppt_exact = true;
  return v;
}

SeparabilityVerdict bd23_separable(const Bd23Params& params) {
  params.validate();
  const auto& p = params.p;
  const double px = p[0] + p[1], pa = p[2] + p[3], pb = p[4] + p[5];
  const double m[3] = {std::sqrt(pa * pb) - std::abs(p[0] - p[1]),
                       std::sqrt(pb * px) - std::abs(p[2] - p[3]),
                       std::sqrt(px * pa) - std::abs(p[4] - p[5])};
  static const char* names[3] = {"S1", "S2", "S3"};
  SeparabilityVerdict v;
  std::size_t arg = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (m[i] < m[arg]) arg = i;
  v.margin = m[arg];
  v.binding = names[arg];
  v.separable = v.margin >= -kBoundaryTol;
  v.ppt_exact = true;
  return v;
}

SeparabilityVerdict family_separable(const FamilyDescriptor& desc) {
  if (const auto* b = std::get_if<BdParams>(&desc)) return bd_separable(*b);
  if (const auto* i = std::get_if<IcdParams>(&desc)) return icd_separable(*i);
  if (const auto* b23 = std::get_if<Bd23Params>(&desc)) return bd23_separable(*b23);

  SeparabilityVerdict v;
  if (const auto* w = std::get_if<WernerParams>(&desc)) {
    w->validate();
    v.margin = w->f;
    v.binding = "f_threshold";
    v.separable = v.margin >= -kBoundaryTol;
    v.ppt_exact = ppt_decides({w->d, w->d});
    return v;
  }
  if (const auto* i = std::get_if<IsotropicParams>(&desc)) {
    i->validate();
    v.margin = 1.0 / static_cast<double>(i->d) - i->big_f;
    v.binding = "fidelity_threshold";
    v.separable = v.margin >= -kBoundaryTol;
    v.ppt_exact = ppt_decides({i->d, i->d});
    return v;
  }
  if (const auto* h = std::get_if<Horo33Params>(&desc)) {
    h->validate();
    v.margin = 3.0 - h->alpha;
    v.binding = "alpha_threshold";
    v.separable = v.margin >= -kBoundaryTol;
    v.ppt_exact = false;
    if (h->alpha <= 3.0 + kBoundaryTol)
      v.label = "separable";
    else if (h->alpha <= 4.0 + kBoundaryTol)
      v.label = "bound-entangled";
    else
      v.label = "free-entangled";
    return v;
  }
  const auto& m = std::get<MultiIsoParams>(desc);
  m.validate();
  v.margin = m.r0() - m.r;
  v.binding = "r_threshold";
  v.separable = v.margin >= -kBoundaryTol;
  v.ppt_exact = m.n == 2 && ppt_decides({m.d, m.d});
  return v;
}

double family_boundary_margin(const FamilyDescriptor& desc) {
  if (const auto* b = std::get_if<BdParams>(&desc)) {
    const double sep = std::abs(bd_separable(*b).margin);
    const double face = *std::min_element(b->p.begin(), b->p.end());
    return std::min(sep, face);
  }
  if (const auto* i = std::get_if<IcdParams>(&desc)) {
    const double sep = std::abs(icd_separable(*i).margin);
    const double face = *std::min_element(i->p.begin(), i->p.end());
    return std::min(sep, face);
  }
  if (const auto* b23 = std::get_if<Bd23Params>(&desc)) {
    const auto& p = b23->p;
    const double px = p[0] + p[1], pa = p[2] + p[3], pb = p[4] + p[5];
    double sep = std::abs(std::sqrt(pa * pb) - std::abs(p[0] - p[1]));
    sep = std::min(sep, std::abs(std::sqrt(pb * px) - std::abs(p[2] - p[3])));
    sep = std::min(sep, std::abs(std::sqrt(px * pa) - std::abs(p[4] - p[5])));
    const double face = *std::min_element(p.begin(), p.end());
    return std::min(sep, face);
  }
  FamilyLine line = family_line(desc);
  return line_boundary_margin(line, line.value);
}

double line_boundary_margin(const FamilyLine& line, double v) {
  double best = std::abs(v - line.sep_lo);
  best = std::min(best, std::abs(v - line.sep_hi));
  best = std::min(best, std::abs(v - line.psd_lo));
  best = std::min(best, std::abs(v - line.psd_hi));
  return best;
}

}  // namespace entrobust
