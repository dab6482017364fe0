// SPDX-License-Identifier: Apache-2.0
#include "entrobust/io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace entrobust::io {

using nlohmann::json;

namespace {

json matrix_json(const ComplexMatrix& m, const std::vector<std::size_t>& dims) {
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json rrow = json::array(), irow = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  return json{{"dims", dims}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from(const json& j, std::vector<std::size_t>* dims_out) {
  if (!j.contains("re") || !j.contains("dims"))
    throw std::invalid_argument("matrix json: missing re/dims");
  const auto& re = j.at("re");
  const std::size_t rows = re.size();
  if (rows == 0) throw std::invalid_argument("matrix json: empty");
  const std::size_t cols = re.at(0).size();
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (re.at(i).size() != cols) throw std::invalid_argument("matrix json: ragged re");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = re.at(i).at(k).get<double>();
  }
  if (j.contains("im") && !j.at("im").is_null()) {
    const auto& im = j.at("im");
    if (im.size() != rows) throw std::invalid_argument("matrix json: ragged im");
    for (std::size_t i = 0; i < rows; ++i) {
      if (im.at(i).size() != cols) throw std::invalid_argument("matrix json: ragged im");
      for (std::size_t k = 0; k < cols; ++k)
        m(i, k) += cplx(0.0, im.at(i).at(k).get<double>());
    }
  }
  if (dims_out) {
    dims_out->clear();
    for (const auto& d : j.at("dims")) dims_out->push_back(d.get<std::size_t>());
  }
  return m;
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m, const std::vector<std::size_t>& dims) {
  return matrix_json(m, dims).dump();
}

std::string density_to_json(const DensityMatrix& rho) {
  return matrix_json(rho.matrix(), rho.dims()).dump();
}

DensityMatrix density_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::size_t> dims;
  ComplexMatrix m = matrix_from(j, &dims);
  return DensityMatrix(m.hermitian_part(), dims);
}

std::string sdp_problem_to_json(const SdpProblem& p) {
  const std::vector<std::size_t> dims{p.F0.rows()};
  json fi = json::array();
  for (const auto& f : p.Fi) fi.push_back(matrix_json(f, dims));
  json j{{"c", p.c}, {"F0", matrix_json(p.F0, dims)}, {"Fi", fi}};
  return j.dump();
}

SdpProblem sdp_problem_from_json(const std::string& text) {
  json j = json::parse(text);
  SdpProblem p;
  if (!j.contains("c") || !j.contains("F0") || !j.contains("Fi"))
    throw std::invalid_argument("sdp json: missing c/F0/Fi");
  for (const auto& v : j.at("c")) p.c.push_back(v.get<double>());
  p.F0 = matrix_from(j.at("F0"), nullptr).hermitian_part();
  for (const auto& f : j.at("Fi"))
    p.Fi.push_back(matrix_from(f, nullptr).hermitian_part());
  p.validate();
  return p;
}

std::string sdp_solution_to_json(const SdpSolution& s) {
  const char* status = s.status == SdpStatus::optimal
                           ? "optimal"
                           : (s.status == SdpStatus::infeasible ? "infeasible"
                                                                : "not_converged");
  json j{{"status", status},
         {"x", s.x},
         {"Z", matrix_json(s.Z, {s.Z.rows()})},
         {"p_star", s.p_star},
         {"d_star", s.d_star},
         {"gap", s.gap},
         {"slackness_residual", s.slackness_residual},
         {"dual_feasibility_residual", s.dual_feasibility_residual},
         {"primal_min_eig", s.primal_min_eig},
         {"iterations", s.iterations}};
  return j.dump();
}

FamilyDescriptor family_from_json(const std::string& family,
                                  const std::string& params_json) {
  json j = json::parse(params_json);
  auto probs = [&](std::size_t k) {
    std::vector<double> p;
    for (const auto& v : j.at("p")) p.push_back(v.get<double>());
    if (p.size() != k) throw std::invalid_argument("params: wrong p length");
    return p;
  };
  if (family == "bd") {
    auto p = probs(4);
    BdParams b{{p[0], p[1], p[2], p[3]}};
    b.validate();
    return b;
  }
  if (family == "icd") {
    auto p = probs(4);
    IcdParams d{j.at("theta").get<double>(), {p[0], p[1], p[2], p[3]}};
    d.validate();
    return d;
  }
  if (family == "bd23") {
    auto p = probs(6);
    Bd23Params b{{p[0], p[1], p[2], p[3], p[4], p[5]}};
    b.validate();
    return b;
  }
  if (family == "werner") {
    WernerParams w{j.at("d").get<std::size_t>(), j.at("f").get<double>()};
    w.validate();
    return w;
  }
  if (family == "isotropic") {
    IsotropicParams i{j.at("d").get<std::size_t>(), j.at("F").get<double>()};
    i.validate();
    return i;
  }
  if (family == "horo33") {
    Horo33Params h{j.at("alpha").get<double>()};
    h.validate();
    return h;
  }
  if (family == "multiiso") {
    MultiIsoParams m{j.at("d").get<std::size_t>(), j.at("n").get<std::size_t>(),
                     j.at("r").get<double>()};
    m.validate();
    return m;
  }
  throw std::invalid_argument("unknown family: " + family);
}

std::string family_params_json(const FamilyDescriptor& desc) {
  json j;
  if (const auto* b = std::get_if<BdParams>(&desc)) {
    j["p"] = b->p;
  } else if (const auto* i = std::get_if<IcdParams>(&desc)) {
    j["theta"] = i->theta;
    j["p"] = i->p;
  } else if (const auto* b23 = std::get_if<Bd23Params>(&desc)) {
    j["p"] = b23->p;
  } else if (const auto* w = std::get_if<WernerParams>(&desc)) {
    j["d"] = w->d;
    j["f"] = w->f;
  } else if (const auto* i = std::get_if<IsotropicParams>(&desc)) {
    j["d"] = i->d;
    j["F"] = i->big_f;
  } else if (const auto* h = std::get_if<Horo33Params>(&desc)) {
    j["alpha"] = h->alpha;
  } else {
    const auto& m = std::get<MultiIsoParams>(desc);
    j["d"] = m.d;
    j["n"] = m.n;
    j["r"] = m.r;
  }
  return j.dump();
}

std::string robustness_to_json(const RobustnessResult& r, const std::string& family,
                               const std::string& params_json, double tol,
                               std::uint64_t seed) {
  json j;
  j["version"] = kVersion;
  j["family"] = family;
  j["params"] = json::parse(params_json);
  j["method"] = method_name(r.method);
  j["tol"] = tol;
  j["seed"] = seed;
  j["s"] = r.s;
  j["separable_input"] = r.separable_input;
  j["ppt_lower_bound"] = r.ppt_lower_bound;
  j["rho_prime"] = matrix_json(r.rho_prime.matrix(), r.rho_prime.dims());
  j["rho_dprime"] = matrix_json(r.rho_dprime.matrix(), r.rho_dprime.dims());
  json certs;
  for (const auto& [k, v] : r.certificates) certs[k] = v;
  j["certificates"] = certs;
  return j.dump();
}

}  // namespace entrobust::io
