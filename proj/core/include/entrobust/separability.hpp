// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "entrobust/linalg.hpp"
#include "entrobust/states.hpp"

namespace entrobust {

/// Outcome of a separability decision. `margin` is the signed distance of the
/// binding inequality from saturation (positive inside the separable region);
/// |margin| <= 1e-10 marks a boundary state. `ppt_exact` says whether the PPT
/// criterion decides separability exactly for the dimensions involved (true
/// on 2x2 and 2x3 only).
struct SeparabilityVerdict {
  bool separable = false;
  double margin = 0.0;
  std::string binding;
  bool ppt_exact = true;
  std::string label;  // classification for families with more than two classes

  bool boundary() const { return std::abs(margin) <= kBoundaryTol; }
};

/// Margin = minimum eigenvalue of the partial transpose. Necessary for
/// separability in all dimensions; necessary and sufficient on 2x2 and 2x3.
SeparabilityVerdict is_ppt(const DensityMatrix& rho);

/// Octahedron test: separable iff max p_i <= 1/2; margin = 1/2 - max p_i.
SeparabilityVerdict bd_separable(const BdParams& params);

/// Two pair inequalities, |p1-p2| <= sqrt(4 p3 p4 / sin^2 2theta + (p3-p4)^2)
/// and the (3,4)-(1,2) mirror (both with the divided form; the verification
/// suite checks this choice against the PPT computation on a dense sweep).
SeparabilityVerdict icd_separable(const IcdParams& params);

/// Three pair inequalities (p_i - p_j)^2 <= (sums of the other pairs).
SeparabilityVerdict bd23_separable(const Bd23Params& params);

/// Dispatch: closed-form verdict for any family descriptor. For horo33 the
/// verdict labels the separable [2,3], bound-entangled (3,4] and
/// free-entangled (4,5] classes; the band edges are encoded as published,
/// and is_ppt is only advisory there (ppt_exact = false).
SeparabilityVerdict family_separable(const FamilyDescriptor& desc);

/// Distance of a family member to the boundary of the separable set,
/// including the state-space faces: min(|separability margin|, distance to
/// the nearest PSD-validity face). Zero for witnesses that sit on either
/// boundary.
double family_boundary_margin(const FamilyDescriptor& desc);

/// Same notion for a point on a one-parameter family line; valid anywhere in
/// the PSD-extended range, including values outside the declared parameter
/// interval (where no descriptor can be formed).
double line_boundary_margin(const FamilyLine& line, double v);

}  // namespace entrobust
