// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "entrobust/linalg.hpp"

namespace entrobust {

inline constexpr double kProbSumTol = 1e-12;

struct BdParams {
  std::array<double, 4> p;
  void validate() const;
};

struct IcdParams {
  double theta;  // in (0, pi/2)
  std::array<double, 4> p;
  void validate() const;
};

struct Bd23Params {
  std::array<double, 6> p;
  void validate() const;
};

struct WernerParams {
  std::size_t d;  // >= 2
  double f;       // in [-1, 1]
  void validate() const;
};

struct IsotropicParams {
  std::size_t d;  // >= 2
  double big_f;   // fidelity with |psi+>, in [0, 1]
  void validate() const;
};

struct Horo33Params {
  double alpha;  // in [2, 5]
  void validate() const;
};

struct MultiIsoParams {
  std::size_t d;  // >= 2
  std::size_t n;  // >= 2, d^n <= 64
  double r;       // in [0, 1]
  void validate() const;
  double r0() const;  // separability threshold (1 + d^(n-1))^-1
};

using FamilyDescriptor = std::variant<BdParams, IcdParams, Bd23Params, WernerParams,
                                      IsotropicParams, Horo33Params, MultiIsoParams>;

std::string family_name(const FamilyDescriptor& desc);

// Bell basis on 2x2 in the fixed lexicographic product basis:
// phi+ phi- psi+ psi-.
std::array<std::vector<cplx>, 4> bell_basis_2x2();

// theta-parameterized orthonormal basis reducing to the Bell basis at pi/4
std::array<std::vector<cplx>, 4> icd_basis(double theta);

// six Bell vectors on 2x3
std::array<std::vector<cplx>, 6> bd23_basis();

/// t_i coordinates of a Bell-diagonal state (linear map of p).
std::array<double, 3> bd_t_from_p(const std::array<double, 4>& p);

DensityMatrix bd_state(const BdParams& params);
DensityMatrix icd_state(const IcdParams& params);
DensityMatrix bd23_state(const Bd23Params& params);
DensityMatrix werner(const WernerParams& params);
DensityMatrix isotropic(const IsotropicParams& params);
DensityMatrix horo33(const Horo33Params& params);
DensityMatrix multi_isotropic(const MultiIsoParams& params);

DensityMatrix family_state(const FamilyDescriptor& desc);

/// F = sum_ij |ij><ji| on d x d.
ComplexMatrix flip_operator(std::size_t d);
/// (1/sqrt(d)) sum_i |ii...i> on d^n.
std::vector<cplx> max_entangled(std::size_t d, std::size_t n = 2);

/// Affine one-parameter line of matrices rho(v) = base + v * slope, with the
/// family's declared range, PSD-validity range and separability threshold.
/// Used by the endpoint logic of the family oracle and by witness
/// construction; evaluation outside the declared range is permitted as long
/// as the matrix stays PSD.
struct FamilyLine {
  ComplexMatrix base, slope;
  std::vector<std::size_t> dims;
  double lo, hi;            // declared parameter range
  double psd_lo, psd_hi;    // PSD-validity range (closed form)
  double sep_lo, sep_hi;    // stated separable interval
  double sep_threshold;     // the separability boundary facing the entangled side
  bool sep_below;           // true: separable side is v <= threshold
  double value;             // the descriptor's parameter
  std::vector<std::size_t> pt_cut;  // bipartition used for PT checks

  DensityMatrix state_at(double v) const;
};

/// Defined for the one-parameter families (werner, isotropic, horo33,
/// multi_iso); throws for the probability-vector families.
FamilyLine family_line(const FamilyDescriptor& desc);

}  // namespace entrobust
