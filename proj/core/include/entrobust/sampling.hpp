// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "entrobust/linalg.hpp"
#include "entrobust/states.hpp"

namespace entrobust {

/// Deterministic RNG: mt19937_64 engine (whose output sequence is pinned by
/// the standard) with explicit bit-to-double maps, so streams are identical
/// across standard libraries for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream for instance `index` of a seeded suite.
  static Rng for_instance(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed * 0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL + 1ULL);
  }

  std::uint64_t next_u64() { return engine_(); }
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Uniform on the probability simplex (sorted uniform spacings).
std::vector<double> sample_simplex(std::size_t k, Rng& rng);

/// G G^H / tr(G G^H) with standard complex Gaussian G.
DensityMatrix sample_density(const std::vector<std::size_t>& dims, Rng& rng);

BdParams sample_entangled_bd(Rng& rng);
IcdParams sample_entangled_icd(double theta, Rng& rng);
/// p1-dominant chamber: violates the first pair condition, satisfies the
/// other two, conventional within-pair ordering.
Bd23Params sample_entangled_bd23(Rng& rng);
/// Full-rank (lambda_4 above threshold) two-qubit state with concurrence
/// above `min_concurrence`.
DensityMatrix sample_entangled_two_qubit(Rng& rng, double min_concurrence = 1e-3,
                                         double min_lambda4 = 1e-4);

}  // namespace entrobust
