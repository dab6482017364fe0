// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "entrobust/analytic.hpp"
#include "entrobust/linalg.hpp"
#include "entrobust/sdp.hpp"
#include "entrobust/states.hpp"

namespace entrobust::io {

inline constexpr const char* kVersion = "entrobust 0.1.0";

// Matrix schema: {"dims":[dA,dB,...],"re":[[...]],"im":[[...]]}, row-major,
// lexicographic basis order. One schema for inputs and witness outputs.
std::string matrix_to_json(const ComplexMatrix& m, const std::vector<std::size_t>& dims);
std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);

// {"c":[...],"F0":matrix,"Fi":[matrix,...]} with plain (single-dim) matrices.
std::string sdp_problem_to_json(const SdpProblem& p);
SdpProblem sdp_problem_from_json(const std::string& text);
std::string sdp_solution_to_json(const SdpSolution& s);

// {"family":"bd","params":{...}}; params alone also accepted by
// family_from_json when the family name is supplied separately.
FamilyDescriptor family_from_json(const std::string& family, const std::string& params_json);
std::string family_params_json(const FamilyDescriptor& desc);

std::string robustness_to_json(const RobustnessResult& r, const std::string& family,
                               const std::string& params_json, double tol,
                               std::uint64_t seed);

}  // namespace entrobust::io
