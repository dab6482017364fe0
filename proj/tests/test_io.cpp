// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "entrobust/analytic.hpp"
#include "entrobust/io.hpp"
#include "entrobust/sampling.hpp"
#include "entrobust/states.hpp"

using namespace entrobust;

TEST_CASE("density matrix round-trips through the schema") {
  Rng rng(81);
  DensityMatrix rho = sample_density({2, 3}, rng);
  std::string text = io::density_to_json(rho);
  DensityMatrix back = io::density_from_json(text);
  CHECK(back.dims() == rho.dims());
  CHECK((back.matrix() - rho.matrix()).max_abs() < 1e-15);
  // serialization is byte-stable
  CHECK(io::density_to_json(back) == text);
}

TEST_CASE("sdp problem round-trips") {
  SdpProblem p;
  p.c = {1.0, -0.5};
  p.F0 = ComplexMatrix::identity(3);
  ComplexMatrix f1(3, 3), f2(3, 3);
  f1(0, 1) = cplx(0.5, 0.25);
  f1(1, 0) = std::conj(f1(0, 1));
  f2(2, 2) = -1.0;
  p.Fi = {f1, f2};
  SdpProblem back = io::sdp_problem_from_json(io::sdp_problem_to_json(p));
  CHECK(back.c == p.c);
  CHECK((back.F0 - p.F0).max_abs() < 1e-15);
  CHECK((back.Fi[0] - p.Fi[0]).max_abs() < 1e-15);
  CHECK((back.Fi[1] - p.Fi[1]).max_abs() < 1e-15);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(io::density_from_json("{\"re\": [[1,0],[0,1]]}"));  // no dims
  CHECK_THROWS(io::density_from_json("not json"));
  CHECK_THROWS(io::sdp_problem_from_json("{\"c\": [1]}"));
  CHECK_THROWS_AS(io::family_from_json("nosuch", "{}"), std::invalid_argument);
  CHECK_THROWS_AS(io::family_from_json("bd", "{\"p\":[0.5,0.5]}"), std::invalid_argument);
  CHECK_THROWS_AS(io::family_from_json("bd", "{\"p\":[0.9,0.2,0.0,0.0]}"),
                  std::invalid_argument);
}

TEST_CASE("family descriptors parse the documented parameter shapes") {
  auto bd = io::family_from_json("bd", R"({"p":[0.7,0.1,0.1,0.1]})");
  CHECK(family_name(bd) == "bd");
  auto icd = io::family_from_json("icd", R"({"theta":0.5,"p":[0.7,0.1,0.1,0.1]})");
  CHECK(family_name(icd) == "icd");
  auto w = io::family_from_json("werner", R"({"d":2,"f":-0.5})");
  CHECK(std::get<WernerParams>(w).f == -0.5);
  auto iso = io::family_from_json("isotropic", R"({"d":3,"F":1.0})");
  CHECK(std::get<IsotropicParams>(iso).big_f == 1.0);
  auto h = io::family_from_json("horo33", R"({"alpha":4.0})");
  CHECK(std::get<Horo33Params>(h).alpha == 4.0);
  auto m = io::family_from_json("multiiso", R"({"d":2,"n":3,"r":0.5})");
  CHECK(std::get<MultiIsoParams>(m).n == 3);
}

TEST_CASE("robustness reports carry seed, tolerance and witnesses") {
  RobustnessResult r = robustness_bd({{0.7, 0.1, 0.1, 0.1}});
  std::string text =
      io::robustness_to_json(r, "bd", R"({"p":[0.7,0.1,0.1,0.1]})", 1e-8, 7);
  CHECK(text.find("\"seed\":7") != std::string::npos);
  CHECK(text.find("\"tol\":1e-08") != std::string::npos);
  CHECK(text.find("\"rho_prime\"") != std::string::npos);
  CHECK(text.find("\"method\":\"analytic\"") != std::string::npos);
  // identical inputs give identical bytes
  CHECK(io::robustness_to_json(r, "bd", R"({"p":[0.7,0.1,0.1,0.1]})", 1e-8, 7) == text);
}
