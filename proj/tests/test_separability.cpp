// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "entrobust/sampling.hpp"
#include "entrobust/separability.hpp"
#include "entrobust/states.hpp"

using namespace entrobust;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("is_ppt basics") {
  DensityMatrix mixed(0.25 * ComplexMatrix::identity(4), {2, 2});
  auto v = is_ppt(mixed);
  CHECK(v.separable);
  CHECK(v.margin == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(v.ppt_exact);

  auto bell = bell_basis_2x2();
  DensityMatrix singlet(outer(bell[3], bell[3]).hermitian_part(), {2, 2});
  auto s = is_ppt(singlet);
  CHECK_FALSE(s.separable);
  CHECK(s.margin == doctest::Approx(-0.5).epsilon(1e-12));

  auto w = is_ppt(werner({3, -0.5}));
  CHECK_FALSE(w.separable);
  CHECK_FALSE(w.ppt_exact);  // 3x3: necessary only

  DensityMatrix multi = multi_isotropic({2, 3, 0.5});
  CHECK_THROWS_AS(is_ppt(multi), std::invalid_argument);
  CHECK_NOTHROW(is_ppt(multi.regrouped({2, 4})));
}

TEST_CASE("bd_separable: threshold at max p = 1/2") {
  auto ent = bd_separable({{0.7, 0.1, 0.1, 0.1}});
  CHECK_FALSE(ent.separable);
  CHECK(ent.margin == doctest::Approx(-0.2).epsilon(1e-12));

  auto boundary = bd_separable({{0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}});
  CHECK(boundary.separable);
  CHECK(boundary.boundary());

  auto mixed = bd_separable({{0.25, 0.25, 0.25, 0.25}});
  CHECK(mixed.separable);
  CHECK(mixed.margin == doctest::Approx(0.25));
}

TEST_CASE("bd_separable is invariant under component permutations") {
  std::array<double, 4> p{0.55, 0.25, 0.15, 0.05};
  const double margin = bd_separable({p}).margin;
  std::sort(p.begin(), p.end());
  do {
    CHECK(bd_separable({p}).margin == doctest::Approx(margin).epsilon(1e-14));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("icd_separable agrees with the PPT computation") {
  // representative instances
  auto sep = icd_separable({kPi / 6, {0.25, 0.25, 0.25, 0.25}});
  CHECK(sep.separable);
  auto ent = icd_separable({kPi / 6, {0.7, 0.1, 0.1, 0.1}});
  CHECK_FALSE(ent.separable);
  CHECK(ent.binding == "pair12");

  // at pi/4 the verdict reduces to the Bell-diagonal one
  Rng rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    auto pv = sample_simplex(4, rng);
    std::array<double, 4> p{pv[0], pv[1], pv[2], pv[3]};
    CHECK(icd_separable({kPi / 4, p}).separable == bd_separable({p}).separable);
  }

  // dense random check of both inequalities against the exact criterion
  for (int rep = 0; rep < 2000; ++rep) {
    const double theta = 0.05 + (kPi / 2 - 0.1) * rng.uniform();
    auto pv = sample_simplex(4, rng);
    IcdParams params{theta, {pv[0], pv[1], pv[2], pv[3]}};
    CHECK(icd_separable(params).separable == is_ppt(icd_state(params)).separable);
  }
}

TEST_CASE("bd23_separable: the three pair inequalities") {
  auto ent = bd23_separable({{0.6, 0.0, 0.1, 0.1, 0.1, 0.1}});
  CHECK_FALSE(ent.separable);
  CHECK(ent.binding == "S1");
  CHECK(ent.margin == doctest::Approx(0.2 - 0.6));  // sqrt(0.04) - 0.6

  auto uniform = bd23_separable({{1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6}});
  CHECK(uniform.separable);

  // exact saturation of the first inequality: pa = 0.2, pb = d^2/pa = 0.05
  const double d = 0.1;  // p1 - p2
  std::array<double, 6> p{};
  p[2] = p[3] = 0.1;
  p[4] = p[5] = 0.025;
  const double rest = 1.0 - p[2] - p[3] - p[4] - p[5];
  p[0] = (rest + d) / 2;
  p[1] = (rest - d) / 2;
  auto boundary = bd23_separable({p});
  CHECK(std::abs(boundary.margin) < 1e-12);

  // matches the PPT computation on random points
  Rng rng(42);
  for (int rep = 0; rep < 500; ++rep) {
    auto pv = sample_simplex(6, rng);
    Bd23Params params{{pv[0], pv[1], pv[2], pv[3], pv[4], pv[5]}};
    CHECK(bd23_separable(params).separable == is_ppt(bd23_state(params)).separable);
  }
}

TEST_CASE("family_separable thresholds and classes") {
  CHECK(family_separable(FamilyDescriptor{WernerParams{3, 0.0}}).boundary());
  CHECK(family_separable(FamilyDescriptor{WernerParams{2, -0.2}}).separable == false);
  CHECK(family_separable(FamilyDescriptor{IsotropicParams{3, 1.0 / 3.0}}).boundary());
  CHECK(family_separable(FamilyDescriptor{MultiIsoParams{2, 3, 0.2}}).boundary());
  CHECK(MultiIsoParams{2, 3, 0.0}.r0() == doctest::Approx(0.2));

  auto sep = family_separable(FamilyDescriptor{Horo33Params{2.5}});
  CHECK(sep.separable);
  CHECK(sep.label == "separable");
  auto bound = family_separable(FamilyDescriptor{Horo33Params{3.5}});
  CHECK_FALSE(bound.separable);
  CHECK(bound.label == "bound-entangled");
  CHECK_FALSE(bound.ppt_exact);
  // the PT test cannot see bound entanglement: advisory only
  CHECK(is_ppt(horo33({3.5})).separable);
  auto free = family_separable(FamilyDescriptor{Horo33Params{4.5}});
  CHECK(free.label == "free-entangled");
  CHECK_FALSE(is_ppt(horo33({4.5})).separable);
}

TEST_CASE("family closed forms agree with PPT on their exact dimensions") {
  Rng rng(43);
  for (int rep = 0; rep < 300; ++rep) {
    auto pv = sample_simplex(4, rng);
    BdParams p{{pv[0], pv[1], pv[2], pv[3]}};
    CHECK(bd_separable(p).separable == is_ppt(bd_state(p)).separable);
  }
  // werner / isotropic on 2x2 where PPT decides
  for (int rep = 0; rep < 50; ++rep) {
    const double f = -1.0 + 2.0 * rng.uniform();
    CHECK(family_separable(FamilyDescriptor{WernerParams{2, f}}).separable ==
          is_ppt(werner({2, f})).separable);
    const double F = rng.uniform();
    CHECK(family_separable(FamilyDescriptor{IsotropicParams{2, F}}).separable ==
          is_ppt(isotropic({2, F})).separable);
  }
}

TEST_CASE("family_boundary_margin is zero exactly on boundary witnesses") {
  CHECK(family_boundary_margin(FamilyDescriptor{BdParams{{0.5, 0.3, 0.1, 0.1}}}) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(family_boundary_margin(FamilyDescriptor{BdParams{{0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3}}}) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(family_boundary_margin(FamilyDescriptor{WernerParams{2, 0.0}}) ==
        doctest::Approx(0.0));
  CHECK(family_boundary_margin(FamilyDescriptor{Horo33Params{3.0}}) ==
        doctest::Approx(0.0));
  CHECK(family_boundary_margin(FamilyDescriptor{BdParams{{0.25, 0.25, 0.25, 0.25}}}) ==
        doctest::Approx(0.25));
}
