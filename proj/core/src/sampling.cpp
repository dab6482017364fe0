// SPDX-License-Identifier: Apache-2.0
#include "entrobust/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entrobust/separability.hpp"
#include "entrobust/wootters.hpp"

namespace entrobust {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::vector<double> sample_simplex(std::size_t k, Rng& rng) {
  std::vector<double> cuts(k + 1);
  cuts[0] = 0.0;
  cuts[k] = 1.0;
  for (std::size_t i = 1; i < k; ++i) cuts[i] = rng.uniform();
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  std::vector<double> p(k);
  for (std::size_t i = 0; i < k; ++i) p[i] = cuts[i + 1] - cuts[i];
  return p;
}

DensityMatrix sample_density(const std::vector<std::size_t>& dims, Rng& rng) {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
  ComplexMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  m *= 1.0 / tr;
  return DensityMatrix(m.hermitian_part(), dims);
}

BdParams sample_entangled_bd(Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto p = sample_simplex(4, rng);
    BdParams params{{p[0], p[1], p[2], p[3]}};
    if (bd_separable(params).margin < -1e-6) return params;
  }
  throw std::runtime_error("sample_entangled_bd: rejection sampling stalled");
}

IcdParams sample_entangled_icd(double theta, Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto p = sample_simplex(4, rng);
    std::sort(p.begin(), p.end(), std::greater<double>());
    IcdParams params{theta, {p[0], p[1], p[2], p[3]}};
    if (icd_separable(params).margin < -1e-6 && p[3] > 1e-4) return params;
  }
  throw std::runtime_error("sample_entangled_icd: rejection sampling stalled");
}

Bd23Params sample_entangled_bd23(Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto p = sample_simplex(6, rng);
    if (p[0] < p[1]) std::swap(p[0], p[1]);
    if (p[2] < p[3]) std::swap(p[2], p[3]);
    if (p[4] < p[5]) std::swap(p[4], p[5]);
    const double pa = p[2] + p[3], pb = p[4] + p[5];
    const bool s1_violated = (p[0] - p[1]) > std::sqrt(pa * pb) + 1e-6;
    const bool s2_ok = (p[2] - p[3]) * (p[2] - p[3]) <= pb * (p[0] + p[1]);
    const bool s3_ok = (p[4] - p[5]) * (p[4] - p[5]) <= (p[0] + p[1]) * pa;
    if (s1_violated && s2_ok && s3_ok)
      return Bd23Params{{p[0], p[1], p[2], p[3], p[4], p[5]}};
  }
  throw std::runtime_error("sample_entangled_bd23: rejection sampling stalled");
}

DensityMatrix sample_entangled_two_qubit(Rng& rng, double min_concurrence,
                                         double min_lambda4) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    DensityMatrix rho = sample_density({2, 2}, rng);
    WoottersData wd = wootters_decompose(rho);
    if (wd.concurrence >= min_concurrence && wd.lambda[3] >= min_lambda4) return rho;
  }
  throw std::runtime_error("sample_entangled_two_qubit: rejection sampling stalled");
}

}  // namespace entrobust
