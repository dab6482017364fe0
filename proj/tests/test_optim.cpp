// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "entrobust/optim.hpp"
#include "entrobust/sampling.hpp"
#include "entrobust/separability.hpp"
#include "entrobust/states.hpp"

using namespace entrobust;

TEST_CASE("ppt robustness: singlet and maximally mixed") {
  DensityMatrix singlet = bd_state({{0, 0, 0, 1}});
  RobustnessResult r = robustness_ppt_sdp(singlet, 1e-9);
  CHECK(r.s == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(r.ppt_lower_bound);
  CHECK(r.certificates.at("gap") <= 1e-8);
  CHECK(r.certificates.at("slackness_residual") <= std::sqrt(1e-8));
  CHECK(r.certificates.at("pseudomixture_residual") <= 1e-9);
  // both witnesses are PPT; the mixture sits on the PT boundary
  CHECK(r.certificates.at("pt_min_eig_prime") >= -1e-8);
  CHECK(r.certificates.at("pt_min_eig_prime") <= 1e-6);
  CHECK(r.certificates.at("pt_min_eig_dprime") >= -1e-8);

  DensityMatrix mixed(0.25 * ComplexMatrix::identity(4), {2, 2});
  RobustnessResult m = robustness_ppt_sdp(mixed, 1e-9);
  CHECK(m.separable_input);
  CHECK(m.s <= 1e-8);
}

TEST_CASE("ppt robustness reproduces the werner closed form") {
  for (double f : {-0.25, -0.5, -1.0}) {
    RobustnessResult r = robustness_ppt_sdp(werner({2, f}), 1e-9);
    CHECK(r.s == doctest::Approx(-f).epsilon(1e-6));
  }
}

TEST_CASE("ppt robustness via the serialized problem form") {
  DensityMatrix singlet = bd_state({{0, 0, 0, 1}});
  SdpProblem prob = make_ppt_robustness_problem(singlet);
  CHECK(prob.c.size() == 16);
  CHECK(prob.F0.rows() == 12);
  SdpSolution sol = solve_sdp(prob, 1e-9);
  REQUIRE(sol.status == SdpStatus::optimal);
  CHECK(sol.p_star == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("ppt robustness flags dims where PPT is only necessary") {
  RobustnessResult r = robustness_ppt_sdp(werner({3, -0.5}), 1e-9);
  CHECK(r.ppt_lower_bound);
  CHECK(r.s == doctest::Approx(0.5).epsilon(1e-6));

  // bound entanglement: the program bottoms out at zero but must not call
  // the state separable
  RobustnessResult h = robustness_ppt_sdp(horo33({3.5}), 1e-9);
  CHECK(h.s <= 1e-8);
  CHECK(h.ppt_lower_bound);
  CHECK_FALSE(h.separable_input);
}

TEST_CASE("family oracle: bell-diagonal closed form") {
  BdParams p{{0.7, 0.1, 0.1, 0.1}};
  RobustnessResult lp = robustness_family_lp(FamilyDescriptor{p});
  CHECK(lp.s == doctest::Approx(0.4).epsilon(1e-8));
  CHECK(lp.method == RobustnessMethod::family_lp);
  CHECK(lp.certificates.at("pseudomixture_residual") <= 1e-9);
  CHECK(lp.certificates.at("lambda_hat_identity_residual") <= 1e-7);

  // separable input short-circuits
  RobustnessResult sep = robustness_family_lp(FamilyDescriptor{BdParams{{0.3, 0.3, 0.2, 0.2}}});
  CHECK(sep.separable_input);
  CHECK(sep.s == 0.0);
}

TEST_CASE("family oracle: one-parameter families against their formulas") {
  CHECK(robustness_family_lp(FamilyDescriptor{WernerParams{3, -0.5}}).s ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(robustness_family_lp(FamilyDescriptor{WernerParams{2, -1.0}}).s ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(robustness_family_lp(FamilyDescriptor{IsotropicParams{3, 1.0}}).s ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(robustness_family_lp(FamilyDescriptor{Horo33Params{4.0}}).s ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(robustness_family_lp(FamilyDescriptor{MultiIsoParams{2, 3, 1.0}}).s ==
        doctest::Approx(7.0 / 3.0).epsilon(1e-9));
  // boundary inputs return zero without touching a solver
  CHECK(robustness_family_lp(FamilyDescriptor{WernerParams{3, 0.0}}).s == 0.0);
  CHECK(robustness_family_lp(FamilyDescriptor{IsotropicParams{2, 0.5}}).s == 0.0);
}

TEST_CASE("family oracle: bd23 matches the reduction on the spot inputs") {
  Bd23Params a{{0.6, 0.0, 0.1, 0.1, 0.1, 0.1}};
  RobustnessResult fa = robustness_family_lp(FamilyDescriptor{a});
  CHECK(fa.s == doctest::Approx(0.6).epsilon(1e-8));
  CHECK(fa.certificates.at("pseudomixture_residual") <= 1e-9);

  Bd23Params b{{0.5, 0.0, 0.125, 0.125, 0.125, 0.125}};
  CHECK(robustness_family_lp(FamilyDescriptor{b}).s == doctest::Approx(0.375).epsilon(1e-8));
}

TEST_CASE("family oracle vs ppt: equal on 2x2, not on 2x3") {
  Rng rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    BdParams p = sample_entangled_bd(rng);
    const double lp = robustness_family_lp(FamilyDescriptor{p}).s;
    const double sdp = robustness_ppt_sdp(bd_state(p), 1e-9).s;
    CHECK(std::abs(lp - sdp) < 1e-6);
  }
  // the diagonal restriction genuinely loses on 2x3
  Bd23Params a{{0.6, 0.0, 0.1, 0.1, 0.1, 0.1}};
  const double lp23 = robustness_family_lp(FamilyDescriptor{a}).s;
  const double sdp23 = robustness_ppt_sdp(bd23_state(a), 1e-9).s;
  CHECK(lp23 == doctest::Approx(0.6).epsilon(1e-7));
  CHECK(sdp23 == doctest::Approx(0.4).epsilon(1e-6));
}

TEST_CASE("lambda-hat identity for analytic witnesses") {
  BdParams p{{0.7, 0.1, 0.1, 0.1}};
  RobustnessResult an = robustness_bd(p);
  const double lh = lambda_hat_sdp(bd_state(p), an.rho_prime, 1e-10);
  CHECK(std::abs(lh - 1.0 / (1.0 + an.s)) < 1e-7);

  Rng rng(62);
  DensityMatrix rho = sample_entangled_two_qubit(rng);
  RobustnessResult rw = robustness_wootters(rho);
  const double lh2 = lambda_hat_sdp(rho, rw.rho_prime, 1e-10);
  CHECK(std::abs(lh2 - 1.0 / (1.0 + rw.s)) < 1e-7);

  // same identity on 2x3: the mixed-in witness is singular at the optimum
  Bd23Params b{{0.6, 0.0, 0.1, 0.1, 0.1, 0.1}};
  RobustnessResult rb = robustness_bd23(b);
  const double lh3 = lambda_hat_sdp(bd23_state(b), rb.rho_prime, 1e-10);
  CHECK(std::abs(lh3 - 1.0 / (1.0 + rb.s)) < 1e-7);
}
