// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "entrobust/linalg.hpp"
#include "entrobust/states.hpp"
#include "entrobust/wootters.hpp"

namespace entrobust {

enum class RobustnessMethod { analytic, sdp, family_lp };

std::string method_name(RobustnessMethod m);

/// s together with the boundary witnesses: rho_prime is the separable mixture
/// reached at minimal mixing, rho_dprime the state mixed in, connected by
/// (1+s) rho_prime = rho + s rho_dprime. `certificates` carries named
/// residuals (pseudomixture defect, witness boundary margins, solver
/// certificates where applicable).
struct RobustnessResult {
  double s = 0.0;
  DensityMatrix rho_prime;
  DensityMatrix rho_dprime;
  RobustnessMethod method = RobustnessMethod::analytic;
  std::map<std::string, double> certificates;
  bool separable_input = false;
  bool ppt_lower_bound = false;
};

/// || (1+s) rho_prime - s rho_dprime - rho ||_F
double verify_pseudomixture(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                            const DensityMatrix& rho_dprime, double s);

/// Convex weights over the three boundary-plane vertices available to the
/// mixed-in state of the x'-frame construction, and the selected plane. The
/// minimum puts all weight on the plane spanned by the cheapest pair of
/// norms, so the optimal plan is a vertex of the weight simplex.
struct WitnessPlan {
  std::array<double, 3> weights{};  // nonnegative, sum 1
  std::size_t plane = 0;            // selected plane, 0..2 over the pairs
                                    // (2,3), (2,4), (3,4) of frame indices
  std::array<std::size_t, 2> pair{};  // the frame indices mixed by the plane
};

/// Plan minimizing s = C (K_i + K_j)/2 over the admissible pairs.
WitnessPlan frame_witness_plan(const std::array<double, 4>& K);

RobustnessResult robustness_bd(const BdParams& params);
RobustnessResult robustness_wootters(const DensityMatrix& rho);
RobustnessResult robustness_icd(const IcdParams& params);
RobustnessResult robustness_bd23(const Bd23Params& params);
RobustnessResult robustness_werner(const WernerParams& params);
RobustnessResult robustness_isotropic(const IsotropicParams& params);
RobustnessResult robustness_horo33(const Horo33Params& params);
RobustnessResult robustness_multi_iso(const MultiIsoParams& params);

RobustnessResult robustness_analytic(const FamilyDescriptor& desc);

/// Closed-form spectrum data of an iso-concurrence state: lambda from the
/// pair formulas, x vectors and norms from the 2x2 sector eigenproblems.
/// Entries ordered by decreasing lambda.
struct IcdSpectrum {
  std::array<double, 4> lambda;
  std::array<double, 4> K;
  std::array<std::vector<cplx>, 4> x;
};
IcdSpectrum icd_spectrum(const IcdParams& params);

/// Minimum mixing weight against separable states diagonal in the 2x3 Bell
/// basis, for a chamber-ordered probability vector (p1>=p2 etc., first pair
/// condition violated, other two satisfied). The inner feasibility maximum
/// is a one-dimensional search over the exit face; bisection on s.
struct Bd23Witness {
  double a = 0.0, b = 0.0;  // pair sums of the mixed-in state
  std::array<double, 6> p_dprime{};
  std::array<double, 6> p_prime{};
};
double bd23_diag_robustness(const std::array<double, 6>& p_sorted,
                            Bd23Witness* witness = nullptr);

/// Maximizes the mixing-denominator over the exit face of the separable
/// region (projected gradient ascent, 10 seeded restarts) and returns the s
/// it induces. Agrees with bd23_diag_robustness whenever the optimum lies on
/// that face.
double bd23_e13_denominator_max(const std::array<double, 6>& p_sorted,
                                std::uint64_t seed, int restarts = 10);

/// Closed-form candidate that the bd23 verification suite compares against;
/// the optimizers do not reproduce it (the suite reports the measured gap).
double bd23_closed_form_candidate(const std::array<double, 6>& p);

}  // namespace entrobust
