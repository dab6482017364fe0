// SPDX-License-Identifier: Apache-2.0
//
// entrobust: robustness of entanglement for the supported state families,
// closed forms cross-checked against a PPT semidefinite program.
//
//   entrobust robustness --family bd --params '{"p":[0.7,0.1,0.1,0.1]}'
//   entrobust robustness --matrix state.json --method sdp
//   entrobust verify --suite bd --samples 1000 --seed 7
//   entrobust sdp-solve problem.json --tol 1e-9
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 non-convergence, 4 infeasible.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "entrobust/analytic.hpp"
#include "entrobust/io.hpp"
#include "entrobust/optim.hpp"
#include "entrobust/sdp.hpp"
#include "entrobust/suites.hpp"
#include "entrobust/wootters.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitInfeasible = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int suite_threads_from_env() {
  const char* env = std::getenv("ENTROBUST_THREADS");
  if (!env) return 0;
  return std::max(0, std::atoi(env));
}

int cmd_robustness(const std::string& family, const std::string& params_json,
                   const std::string& matrix_path, std::string method, double tol,
                   std::uint64_t seed, const std::string& out_path) {
  using namespace entrobust;
  std::string family_used = family, params_used = params_json;

  RobustnessResult result = [&]() -> RobustnessResult {
    if (!matrix_path.empty()) {
      DensityMatrix rho = io::density_from_json(read_file(matrix_path));
      family_used = "matrix";
      params_used = "{\"path\":\"" + matrix_path + "\"}";
      const bool two_qubit = rho.dims() == std::vector<std::size_t>{2, 2};
      if (method.empty()) {
        // analytic for full-rank two-qubit states, SDP otherwise
        method = two_qubit && wootters_decompose(rho).k_available ? "analytic" : "sdp";
      }
      if (method == "analytic") {
        if (!two_qubit)
          throw std::invalid_argument("analytic method needs a two-qubit matrix");
        return robustness_wootters(rho);
      }
      if (method == "sdp") return robustness_ppt_sdp(rho, tol);
      throw std::invalid_argument("matrix input supports methods analytic|sdp");
    }
    if (family.empty() || params_json.empty())
      throw std::invalid_argument("need --family and --params, or --matrix");
    FamilyDescriptor desc = io::family_from_json(family, params_json);
    if (method.empty()) method = "analytic";
    if (method == "analytic") return robustness_analytic(desc);
    if (method == "lp") return robustness_family_lp(desc, std::min(tol, 1e-10));
    if (method == "sdp") return robustness_ppt_sdp(family_state(desc), tol);
    throw std::invalid_argument("unknown method: " + method);
  }();
  emit(io::robustness_to_json(result, family_used, params_used, tol, seed), out_path);
  return kExitOk;
}

int cmd_verify(const std::string& suite, int samples, std::uint64_t seed, double tol,
               bool timing, const std::string& out_path) {
  entrobust::suites::SuiteOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.tol = tol;
  opt.threads = suite_threads_from_env();
  opt.timing = timing;
  entrobust::suites::RunReport rep = entrobust::suites::run_suite(suite, opt);
  emit(entrobust::suites::report_to_json(rep), out_path);
  return rep.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_sdp_solve(const std::string& input_path, double tol, const std::string& out_path) {
  using namespace entrobust;
  SdpProblem prob = io::sdp_problem_from_json(read_file(input_path));
  SdpSolution sol = solve_sdp(prob, tol);
  emit(io::sdp_solution_to_json(sol), out_path);
  if (sol.status == SdpStatus::infeasible) return kExitInfeasible;
  if (sol.status == SdpStatus::not_converged) return kExitNotConverged;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robustness of entanglement: closed forms and PPT semidefinite programs"};
  app.require_subcommand(1);

  std::string family, params, matrix_path, method, out_path, suite;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int samples = 0;
  bool timing = false;
  std::string sdp_input;

  auto* rob = app.add_subcommand("robustness", "robustness of one state");
  rob->add_option("--family", family, "bd|icd|bd23|werner|isotropic|horo33|multiiso");
  rob->add_option("--params", params, "family parameters as JSON");
  rob->add_option("--matrix", matrix_path, "density matrix JSON file");
  rob->add_option("--method", method, "analytic|sdp|lp");
  rob->add_option("--tol", tol, "solver tolerance");
  rob->add_option("--seed", seed, "seed recorded in the report");
  rob->add_option("--out", out_path, "output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite,
                  "bd|wootters|icd|bd23|werner|isotropic|horo33|multiiso|offdiag|sdp-certs")
      ->required();
  ver->add_option("--samples", samples, "sample count (0: suite default)");
  ver->add_option("--seed", seed, "RNG seed");
  ver->add_option("--tol", tol, "tolerance");
  ver->add_flag("--timing", timing, "include wall time in the report");
  ver->add_option("--out", out_path, "output path (default stdout)");

  auto* sdp = app.add_subcommand("sdp-solve", "solve a serialized SDP");
  sdp->add_option("input", sdp_input, "problem JSON file")->required();
  sdp->add_option("--tol", tol, "solver tolerance");
  sdp->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rob->parsed()) return cmd_robustness(family, params, matrix_path, method, tol,
                                             seed, out_path);
    if (ver->parsed()) return cmd_verify(suite, samples, seed, tol, timing, out_path);
    if (sdp->parsed()) return cmd_sdp_solve(sdp_input, tol, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotConverged;
  }
  return kExitInvalidInput;
}
