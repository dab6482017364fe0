// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "entrobust/analytic.hpp"
#include "entrobust/sdp.hpp"
#include "entrobust/states.hpp"

namespace entrobust {

/// minimize tr X  s.t.  X >= 0, X^TB >= 0, (rho + X)^TB >= 0, as one
/// block-diagonal LMI over the n^2 Hermitian coordinates of X. Then
/// s = tr X, rho'' = X/s, rho' = (rho + X)/(1+s).
SdpProblem make_ppt_robustness_problem(const DensityMatrix& rho);

/// Robustness with separability relaxed to the PPT cone. Exact on [2,2] and
/// [2,3]; a lower bound elsewhere (flagged ppt_lower_bound). Both LMI sides
/// have strictly feasible starts, so the solve is well behaved.
RobustnessResult robustness_ppt_sdp(const DensityMatrix& rho, double tol = 1e-9);

/// Diagonal-family oracle: minimum mixing weight with both the mixture and
/// the mixed-in state inside the family's separable set.
///  - bd: bisection on s over two-phase simplex feasibility of the
///    octahedron constraints.
///  - icd / bd23: the diagonal restriction of the PPT robustness program
///    (min sum Y, Y >= 0 componentwise, family(Y) and family(p)+family(Y)
///    both PPT) solved by solve_sdp; PPT is exact on these dimensions.
///  - one-parameter families: endpoint logic on the family line, with the
///    separability threshold and the far PSD endpoint located by bisection
///    on matrix spectra (PT minimum eigenvalue / minimum eigenvalue), except
///    horo33 whose threshold is not PPT-visible and uses the encoded value.
RobustnessResult robustness_family_lp(const FamilyDescriptor& desc, double tol = 1e-10);

/// Largest L with rho_prime - L * rho >= 0, solved as a one-variable SDP.
/// The analytic constructions satisfy L = 1/(1+s) exactly.
double lambda_hat_sdp(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                      double tol = 1e-10);

}  // namespace entrobust
