#include "kbembed/json_io.hpp"

#include <charconv>
#include <system_error>

#include "kbembed/errors.hpp"

namespace kbembed {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (cplx c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw Error("polynomial must be an array of [re, im] pairs");
  std::vector<cplx> c;
  for (const auto& item : j) c.push_back(cplx_from_json(item));
  return Polynomial(std::move(c));
}

json to_json(const BlaschkeProduct& b) {
  json zeros = json::array();
  for (const auto& zk : b.zeros())
    zeros.push_back({{"z", to_json(zk.z)}, {"r", zk.r}});
  return {{"gamma", to_json(b.gamma())}, {"zeros", zeros}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gamma") || !j.contains("zeros"))
    throw Error("Blaschke product needs gamma and zeros fields");
  std::vector<BlaschkeZero> zeros;
  for (const auto& item : j.at("zeros"))
    zeros.push_back({cplx_from_json(item.at("z")), item.at("r").get<int>()});
  return BlaschkeProduct(std::move(zeros), cplx_from_json(j.at("gamma")));
}

json to_json(const RationalSchur& s) {
  return {{"num", to_json(s.num())}, {"den", to_json(s.den())}};
}

RationalSchur schur_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error("rational Schur function needs num and den fields");
  return {polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den"))};
}

json to_json(const AtomicMeasure& sigma) {
  json atoms = json::array();
  for (const auto& a : sigma.atoms())
    atoms.push_back({{"t", to_json(a.t)}, {"s", a.s}});
  return {{"atoms", atoms}};
}

AtomicMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms"))
    throw Error("measure needs an atoms field");
  std::vector<Atom> atoms;
  for (const auto& item : j.at("atoms"))
    atoms.push_back({cplx_from_json(item.at("t")), item.at("s").get<double>()});
  return AtomicMeasure(std::move(atoms));
}

json to_json(const HerglotzData& h) {
  json out = to_json(h.measure);
  out["beta"] = h.beta;
  return out;
}

HerglotzData herglotz_from_json(const json& j) {
  HerglotzData out;
  out.measure = measure_from_json(j);
  out.beta = j.value("beta", 0.0);
  return out;
}

namespace {

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json to_json(const IsometryCertificate& cert) {
  return {{"max_deviation", cert.max_deviation},
          {"passed", cert.passed},
          {"tolerance", cert.tolerance},
          {"quadrature_points", cert.quadrature_points},
          {"lebesgue_condition", cert.lebesgue_condition},
          {"ill_conditioned", cert.ill_conditioned},
          {"gram_lebesgue", matrix_to_json(cert.gram_lebesgue)},
          {"gram_sigma", matrix_to_json(cert.gram_sigma)}};
}

json to_json(const ExtremalityReport& report) {
  json out = {{"verdict", report.verdict == Extremality::extreme ? "extreme" : "not_extreme"},
              {"support_size", report.support_size},
              {"bounds", {{"lower", report.lower_bound}, {"upper", report.upper_bound}}}};
  if (report.decomposition) {
    out["decomposition"] = {{"plus", to_json(report.decomposition->first)},
                            {"minus", to_json(report.decomposition->second)}};
  }
  if (report.phi0) out["phi0"] = *report.phi0;
  return out;
}

PickSystem pick_system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("values"))
    throw Error("pick system needs nodes and values fields");
  PickSystem sys;
  for (const auto& item : j.at("nodes")) sys.nodes.push_back(cplx_from_json(item));
  for (const auto& item : j.at("values")) sys.values.push_back(cplx_from_json(item));
  sys.boundary = j.value("boundary", false);
  if (!sys.boundary) sys.matrix = pick_matrix(sys.nodes, sys.values);
  return sys;
}

std::string measure_to_csv(const AtomicMeasure& sigma) {
  std::string out = "arg_t,re_t,im_t,weight\n";
  for (const auto& a : sigma.atoms()) {
    out += format_double(arg_2pi(a.t));
    out += ',';
    out += format_double(a.t.real());
    out += ',';
    out += format_double(a.t.imag());
    out += ',';
    out += format_double(a.s);
    out += '\n';
  }
  return out;
}

}  // namespace kbembed
