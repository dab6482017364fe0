// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "entrobust/lp.hpp"
#include "entrobust/sampling.hpp"
#include "entrobust/sdp.hpp"

using namespace entrobust;

namespace {

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = 0.5 * cplx(rng.normal(), rng.normal());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// Instance with x = 0 strictly primal feasible and Z = I dual feasible,
// normalized to unit data scale.
SdpProblem both_sides_feasible(std::size_t order, std::size_t nvars, Rng& rng) {
  SdpProblem prob;
  for (std::size_t v = 0; v < nvars; ++v) {
    ComplexMatrix f = random_hermitian(order, rng);
    f *= 1.0 / f.frobenius_norm();
    prob.Fi.push_back(f);
    prob.c.push_back(f.trace().real());
  }
  ComplexMatrix g(order, order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) g(a, b) = cplx(rng.normal(), rng.normal());
  prob.F0 = (g * g.adjoint()).hermitian_part();
  prob.F0 *= 1.0 / prob.F0.frobenius_norm();
  prob.F0 += 0.5 * ComplexMatrix::identity(order);
  return prob;
}

}  // namespace

TEST_CASE("scalar LMI: minimize x subject to x - a >= 0") {
  for (double a : {-2.0, 0.5, 3.0}) {
    SdpProblem p;
    p.c = {1.0};
    ComplexMatrix f0(1, 1), f1(1, 1);
    f0(0, 0) = -a;
    f1(0, 0) = 1.0;
    p.F0 = f0;
    p.Fi = {f1};
    SdpSolution s = solve_sdp(p, 1e-10);
    REQUIRE(s.status == SdpStatus::optimal);
    CHECK(s.x[0] == doctest::Approx(a).epsilon(1e-8));
    CHECK(std::abs(s.gap) < 1e-8);
  }
}

TEST_CASE("diagonal SDP matches the simplex oracle") {
  Rng rng(51);
  for (int rep = 0; rep < 8; ++rep) {
    const std::size_t order = 4 + static_cast<std::size_t>(rng.uniform() * 4);
    const std::size_t nvars = 2;
    std::vector<std::vector<double>> fdiag(nvars, std::vector<double>(order));
    std::vector<double> f0diag(order);
    SdpProblem prob;
    for (std::size_t k = 0; k < order; ++k) f0diag[k] = 0.5 + rng.uniform();
    for (std::size_t v = 0; v < nvars; ++v) {
      ComplexMatrix f(order, order);
      for (std::size_t k = 0; k < order; ++k) {
        fdiag[v][k] = rng.normal();
        f(k, k) = fdiag[v][k];
      }
      prob.Fi.push_back(f);
      prob.c.push_back(f.trace().real());
    }
    ComplexMatrix f0(order, order);
    for (std::size_t k = 0; k < order; ++k) f0(k, k) = f0diag[k];
    prob.F0 = f0;

    SdpInit init;
    init.x.assign(nvars, 0.0);
    init.Z = ComplexMatrix::identity(order);
    SdpSolution sol = solve_sdp(prob, 1e-10, &init);

    // same data as a linear program with split signs and slacks
    LpProblem lp;
    const std::size_t nv = 2 * nvars + order;
    lp.c.assign(nv, 0.0);
    for (std::size_t v = 0; v < nvars; ++v) {
      lp.c[v] = prob.c[v];
      lp.c[nvars + v] = -prob.c[v];
    }
    for (std::size_t k = 0; k < order; ++k) {
      std::vector<double> row(nv, 0.0);
      for (std::size_t v = 0; v < nvars; ++v) {
        row[v] = fdiag[v][k];
        row[nvars + v] = -fdiag[v][k];
      }
      row[2 * nvars + k] = -1.0;
      lp.A.push_back(row);
      lp.b.push_back(-f0diag[k]);
    }
    LpSolution ls = solve_lp(lp);
    if (ls.status == LpStatus::unbounded) {
      CHECK(sol.status != SdpStatus::optimal);
      continue;
    }
    REQUIRE(sol.status == SdpStatus::optimal);
    REQUIRE(ls.status == LpStatus::optimal);
    CHECK(std::abs(ls.objective - sol.p_star) < 1e-7);
  }
}

TEST_CASE("certificates on random feasible instances") {
  Rng rng(52);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t order = 3 + static_cast<std::size_t>(rng.uniform() * 5);
    const std::size_t nvars = 2 + static_cast<std::size_t>(rng.uniform() * 4);
    SdpProblem prob = both_sides_feasible(order, nvars, rng);
    SdpInit init;
    init.x.assign(nvars, 0.0);
    init.Z = ComplexMatrix::identity(order);

    double min_gap = 0.0;
    SdpSolution sol = solve_sdp(prob, 1e-9, &init,
                                [&](int, double, double, double gap) {
                                  min_gap = std::min(min_gap, gap);
                                });
    REQUIRE(sol.status == SdpStatus::optimal);
    CHECK(std::abs(sol.gap) <= 1e-8);
    CHECK(sol.slackness_residual <= std::sqrt(1e-8));
    CHECK(sol.dual_feasibility_residual <= 1e-7);
    CHECK(sol.primal_min_eig >= -1e-8);
    CHECK(min_gap >= -1e-8);  // weak duality along the whole path
    CHECK(min_eigenvalue(sol.Z) >= -1e-8);
  }
}

TEST_CASE("infeasible LMI is certified") {
  // x >= 1 and x <= -1 cannot hold
  SdpProblem p;
  p.c = {1.0};
  ComplexMatrix f0(2, 2), f1(2, 2);
  f0(0, 0) = -1.0;
  f0(1, 1) = -1.0;
  f1(0, 0) = 1.0;
  f1(1, 1) = -1.0;
  p.F0 = f0;
  p.Fi = {f1};
  SdpSolution s = solve_sdp(p, 1e-9);
  CHECK(s.status == SdpStatus::infeasible);
}

TEST_CASE("check_slackness") {
  ComplexMatrix zero(3, 3);
  CHECK(check_slackness(zero, ComplexMatrix::identity(3)) == 0.0);

  // PSD factors with orthogonal ranges
  ComplexMatrix a(2, 2), b(2, 2);
  a(0, 0) = 2.0;
  b(1, 1) = 5.0;
  CHECK(check_slackness(a, b) <= 1e-12);

  ComplexMatrix c = ComplexMatrix::identity(2);
  CHECK(check_slackness(c, c) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("sdp input validation") {
  SdpProblem p;
  p.c = {1.0, 2.0};
  p.F0 = ComplexMatrix::identity(2);
  p.Fi = {ComplexMatrix::identity(2)};  // |c| mismatch
  CHECK_THROWS_AS(solve_sdp(p, 1e-8), std::invalid_argument);

  SdpProblem big;
  big.c = {};
  big.F0 = ComplexMatrix::identity(65);
  CHECK_THROWS_AS(solve_sdp(big, 1e-8), std::invalid_argument);
}

TEST_CASE("complex Hermitian data round-trips through the solver") {
  Rng rng(53);
  SdpProblem prob = both_sides_feasible(5, 3, rng);
  // make the data genuinely complex
  bool has_imag = false;
  for (const auto& f : prob.Fi)
    for (const auto& e : f.data()) has_imag |= std::abs(e.imag()) > 1e-12;
  CHECK(has_imag);
  SdpSolution sol = solve_sdp(prob, 1e-9);
  REQUIRE(sol.status == SdpStatus::optimal);
  CHECK(min_eigenvalue(sdp_matrix_at(prob, sol.x)) >= -1e-8);
}
