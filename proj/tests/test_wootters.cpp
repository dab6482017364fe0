// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "entrobust/sampling.hpp"
#include "entrobust/states.hpp"
#include "entrobust/wootters.hpp"

using namespace entrobust;

namespace {

// Independent spectrum oracle: lambda_i are the sqrt-eigenvalues of
// sqrt(rho) * flip(rho) * sqrt(rho), computed without the Takagi route.
std::array<double, 4> lambda_oracle(const DensityMatrix& rho) {
  ComplexMatrix sq = herm_sqrt(rho.matrix());
  ComplexMatrix m = (sq * spin_flip(rho.matrix()) * sq).hermitian_part();
  auto ev = eig_hermitian(m).values;
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(ev[i], 0.0));
  return lam;
}

}  // namespace

TEST_CASE("spin flip fixes the Bell projectors up to sign") {
  auto bell = bell_basis_2x2();
  // Y|phi+*> = -|phi+>, Y|psi-*> = -|psi->, the other two map to themselves
  const double signs[4] = {-1.0, 1.0, 1.0, -1.0};
  for (int k = 0; k < 4; ++k) {
    auto flipped = spin_flip(bell[k]);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(flipped[i] - signs[k] * bell[k][i]) < 1e-15);
  }
}

TEST_CASE("wootters decomposition of Bell-diagonal states: lambda = sorted p, K = 1") {
  WoottersData wd = wootters_decompose(bd_state({{0.7, 0.1, 0.1, 0.1}}));
  CHECK(wd.lambda[0] == doctest::Approx(0.7).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(wd.lambda[i] == doctest::Approx(0.1).epsilon(1e-10));
  REQUIRE(wd.k_available);
  for (int i = 0; i < 4; ++i) CHECK(wd.K[i] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(wd.concurrence == doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("wootters decomposition of the maximally mixed state") {
  WoottersData wd = wootters_decompose(DensityMatrix(0.25 * ComplexMatrix::identity(4), {2, 2}));
  for (int i = 0; i < 4; ++i) CHECK(wd.lambda[i] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(wd.concurrence == 0.0);
}

TEST_CASE("wootters decomposition: contracts on random rank-4 states") {
  Rng rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    DensityMatrix rho = sample_density({2, 2}, rng);
    WoottersData wd = wootters_decompose(rho);

    // reconstruction
    ComplexMatrix recon(4, 4);
    for (int k = 0; k < 4; ++k) recon += outer(wd.x[k], wd.x[k]);
    CHECK((recon - rho.matrix()).max_abs() < 1e-9);

    // <x_i | x~_j> = lambda_i delta_ij
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const cplx ov = inner(wd.x[i], spin_flip(wd.x[j]));
        const double want = i == j ? wd.lambda[i] : 0.0;
        CHECK(std::abs(ov - want) < 1e-9);
      }

    // spectrum against the independent oracle
    auto lam = lambda_oracle(rho);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(wd.lambda[i] - lam[i]) < 1e-9);

    if (wd.k_available) {
      // normalized frame: <x'_i | x~'_j> = delta_ij, sum lambda_i K_i = 1
      double psum = 0.0;
      for (int i = 0; i < 4; ++i) psum += wd.lambda[i] * wd.K[i];
      CHECK(psum == doctest::Approx(1.0).epsilon(1e-10));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          std::vector<cplx> xi = wd.x[i], xj = wd.x[j];
          for (auto& e : xi) e /= std::sqrt(wd.lambda[i]);
          for (auto& e : xj) e /= std::sqrt(wd.lambda[j]);
          const cplx ov = inner(xi, spin_flip(xj));
          CHECK(std::abs(ov - (i == j ? 1.0 : 0.0)) < 1e-9);
        }
    }
  }
}

TEST_CASE("wootters decomposition flags rank deficiency but still reconstructs") {
  auto bell = bell_basis_2x2();
  DensityMatrix pure(outer(bell[0], bell[0]).hermitian_part(), {2, 2});
  WoottersData wd = wootters_decompose(pure);
  CHECK_FALSE(wd.k_available);
  CHECK(wd.concurrence == doctest::Approx(1.0).epsilon(1e-10));
  ComplexMatrix recon(4, 4);
  for (int k = 0; k < 4; ++k) recon += outer(wd.x[k], wd.x[k]);
  CHECK((recon - pure.matrix()).max_abs() < 1e-9);

  // a rank-2 separable mix: every lambda vanishes
  std::vector<cplx> e00{1, 0, 0, 0}, e01{0, 1, 0, 0};
  ComplexMatrix m = 0.5 * outer(e00, e00) + 0.5 * outer(e01, e01);
  WoottersData sep = wootters_decompose(DensityMatrix(m.hermitian_part(), {2, 2}));
  CHECK(sep.concurrence == 0.0);
  CHECK(sep.lambda[0] < 1e-10);
  ComplexMatrix recon2(4, 4);
  for (int k = 0; k < 4; ++k) recon2 += outer(sep.x[k], sep.x[k]);
  CHECK((recon2 - m).max_abs() < 1e-9);
}

TEST_CASE("concurrence matches the oracle") {
  Rng rng(32);
  for (int rep = 0; rep < 30; ++rep) {
    DensityMatrix rho = sample_density({2, 2}, rng);
    auto lam = lambda_oracle(rho);
    const double want = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
    CHECK(std::abs(concurrence(rho) - want) < 1e-10);
  }
}
