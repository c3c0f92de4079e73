#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kbembed/clark.hpp"
#include "kbembed/errors.hpp"
#include "kbembed/extremal.hpp"
#include "kbembed/json_io.hpp"
#include "kbembed/model_space.hpp"
#include "kbembed/pick.hpp"

namespace py = pybind11;
using namespace kbembed;

namespace {

std::vector<std::pair<cplx, int>> zero_pairs(const BlaschkeProduct& b) {
  std::vector<std::pair<cplx, int>> out;
  for (const auto& zk : b.zeros()) out.emplace_back(zk.z, zk.r);
  return out;
}

BlaschkeProduct blaschke_from_pairs(const std::vector<std::pair<cplx, int>>& zeros,
                                    cplx gamma) {
  std::vector<BlaschkeZero> zs;
  for (const auto& [z, r] : zeros) zs.push_back({z, r});
  return BlaschkeProduct(std::move(zs), gamma);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Blaschke products, Clark measures, model-space embedding "
            "measures and their extreme points";

  py::register_exception<Error>(m, "KbembedError", PyExc_RuntimeError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<std::vector<cplx>>(), py::arg("coeffs"))
      .def_property_readonly("coeffs", &Polynomial::coeffs)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("__call__", &Polynomial::eval, py::arg("z"))
      .def("roots", &Polynomial::roots)
      .def("__repr__", [](const Polynomial& p) {
        return "Polynomial(degree=" + std::to_string(p.degree()) + ")";
      });

  m.def("reversed_poly", &reversed, py::arg("q"), py::arg("m"),
        "z^m * conj(Q(1/conj(z)))");

  py::class_<BlaschkeProduct>(m, "BlaschkeProduct")
      .def(py::init(&blaschke_from_pairs), py::arg("zeros"),
           py::arg("gamma") = cplx{1.0, 0.0})
      .def_static("monomial", &BlaschkeProduct::monomial, py::arg("n"))
      .def_property_readonly("degree", &BlaschkeProduct::degree)
      .def_property_readonly("gamma", &BlaschkeProduct::gamma)
      .def_property_readonly("zeros", &zero_pairs)
      .def("__call__", &BlaschkeProduct::eval, py::arg("z"))
      .def("log_derivative", &BlaschkeProduct::log_derivative, py::arg("t"))
      .def("__repr__", [](const BlaschkeProduct& b) {
        return "BlaschkeProduct(degree=" + std::to_string(b.degree()) + ")";
      });

  m.def("multiply", &multiply, py::arg("b1"), py::arg("b2"));
  m.def("to_quotient", [](const BlaschkeProduct& b) {
    BlaschkeQuotient quo = to_quotient(b);
    return py::make_tuple(quo.gamma, quo.q);
  });
  m.def("mobius_precompose", &mobius_precompose, py::arg("b"), py::arg("a"));

  py::class_<RationalSchur>(m, "RationalSchur")
      .def(py::init<Polynomial, Polynomial>(), py::arg("num"), py::arg("den"))
      .def_static("constant", &RationalSchur::constant, py::arg("c"))
      .def_property_readonly("num", &RationalSchur::num)
      .def_property_readonly("den", &RationalSchur::den)
      .def_property_readonly("degree", &RationalSchur::degree)
      .def("__call__", &RationalSchur::eval, py::arg("z"));

  py::class_<SchurCheck>(m, "SchurCheck")
      .def_readonly("ok", &SchurCheck::ok)
      .def_readonly("max_modulus", &SchurCheck::max_modulus)
      .def_readonly("min_modulus", &SchurCheck::min_modulus)
      .def_readonly("den_root_free", &SchurCheck::den_root_free);

  m.def("schur_check", &schur_check, py::arg("s"), py::arg("grid") = 4096);
  m.def("is_inner", &is_inner, py::arg("s"), py::arg("grid") = 4096,
        py::arg("tolerance") = tol::inner_boundary);
  m.def("from_blaschke", &from_blaschke, py::arg("b"));
  m.def("to_blaschke", &to_blaschke, py::arg("s"));

  py::class_<Atom>(m, "Atom")
      .def_readonly("t", &Atom::t)
      .def_readonly("s", &Atom::s);

  py::class_<AtomicMeasure>(m, "AtomicMeasure")
      .def(py::init([](const std::vector<std::pair<cplx, double>>& atoms) {
             std::vector<Atom> out;
             for (const auto& [t, s] : atoms) out.push_back({t, s});
             return AtomicMeasure(std::move(out));
           }),
           py::arg("atoms"))
      .def_property_readonly("atoms",
                             [](const AtomicMeasure& sigma) {
                               std::vector<std::pair<cplx, double>> out;
                               for (const auto& a : sigma.atoms())
                                 out.emplace_back(a.t, a.s);
                               return out;
                             })
      .def_property_readonly("support_size", &AtomicMeasure::support_size)
      .def_property_readonly("total_mass", &AtomicMeasure::total_mass)
      .def("__len__", &AtomicMeasure::support_size)
      .def("__repr__", [](const AtomicMeasure& sigma) {
        return "AtomicMeasure(support=" + std::to_string(sigma.support_size()) + ")";
      });

  m.def("mobius_pushforward", &mobius_pushforward, py::arg("sigma"), py::arg("a"));
  m.def("measures_match", &measures_match, py::arg("lhs"), py::arg("rhs"),
        py::arg("pos_tol") = tol::atom_match, py::arg("weight_tol") = tol::atom_match);

  py::class_<HerglotzData>(m, "HerglotzData")
      .def_readonly("beta", &HerglotzData::beta)
      .def_readonly("measure", &HerglotzData::measure);

  m.def("support_points", &support_points, py::arg("b"), py::arg("omega"));
  m.def("support_weight", &support_weight, py::arg("b"), py::arg("omega"), py::arg("t"));
  m.def("measure_from_schur",
        py::overload_cast<const BlaschkeProduct&, const BlaschkeProduct&>(
            &measure_from_schur),
        py::arg("b"), py::arg("omega"));
  m.def("measure_from_schur_rational",
        py::overload_cast<const BlaschkeProduct&, const RationalSchur&>(
            &measure_from_schur),
        py::arg("b"), py::arg("omega"));

  py::class_<SchurRecovery>(m, "SchurRecovery")
      .def_readonly("omega", &SchurRecovery::omega)
      .def_readonly("beta", &SchurRecovery::beta);

  m.def("schur_from_measure", &schur_from_measure, py::arg("b"), py::arg("sigma"));
  m.def("clark_measure", &clark_measure, py::arg("b"), py::arg("alpha"));

  py::class_<MaxMassResult>(m, "MaxMassResult")
      .def_readonly("sigma", &MaxMassResult::sigma)
      .def_readonly("mass", &MaxMassResult::mass)
      .def_readonly("alpha", &MaxMassResult::alpha);

  m.def("max_mass", &max_mass, py::arg("b"), py::arg("tau"));

  py::class_<IsometryCertificate>(m, "IsometryCertificate")
      .def_readonly("max_deviation", &IsometryCertificate::max_deviation)
      .def_readonly("passed", &IsometryCertificate::passed)
      .def_readonly("tolerance", &IsometryCertificate::tolerance)
      .def_readonly("quadrature_points", &IsometryCertificate::quadrature_points)
      .def_readonly("gram_lebesgue", &IsometryCertificate::gram_lebesgue)
      .def_readonly("gram_sigma", &IsometryCertificate::gram_sigma)
      .def_readonly("lebesgue_condition", &IsometryCertificate::lebesgue_condition)
      .def_readonly("ill_conditioned", &IsometryCertificate::ill_conditioned);

  m.def(
      "verify_isometry",
      [](const BlaschkeProduct& b, const AtomicMeasure& sigma, double tolerance) {
        return verify_isometry(b, sigma, tolerance);
      },
      py::arg("b"), py::arg("sigma"), py::arg("tolerance") = 1e-8);

  m.def("pick_matrix", &pick_matrix, py::arg("nodes"), py::arg("values"));

  py::class_<Solvability>(m, "Solvability")
      .def_readonly("solvable", &Solvability::solvable)
      .def_readonly("min_eigenvalue", &Solvability::min_eigenvalue)
      .def_readonly("norm", &Solvability::norm)
      .def_readonly("margin", &Solvability::margin);

  m.def("solvability", &solvability, py::arg("pick"), py::arg("tolerance") = tol::rank_cutoff);

  py::class_<Uniqueness>(m, "Uniqueness")
      .def_readonly("unique", &Uniqueness::unique)
      .def_readonly("rank", &Uniqueness::rank)
      .def_readonly("smallest_ratio", &Uniqueness::smallest_ratio);

  m.def("uniqueness", &uniqueness, py::arg("pick"), py::arg("tolerance") = tol::rank_cutoff);
  m.def("numerical_rank",
        py::overload_cast<const Eigen::MatrixXcd&, double>(&numerical_rank),
        py::arg("m"), py::arg("rel_tol") = tol::rank_cutoff);
  m.def("recover_fbp", &recover_fbp, py::arg("nodes"), py::arg("values"),
        py::arg("max_degree"));
  m.def("boundary_fbp_interpolation", &boundary_fbp_interpolation, py::arg("nodes"),
        py::arg("values"));

  py::enum_<Extremality>(m, "Extremality")
      .value("extreme", Extremality::extreme)
      .value("not_extreme", Extremality::not_extreme);

  py::class_<ExtremalityReport>(m, "ExtremalityReport")
      .def_readonly("verdict", &ExtremalityReport::verdict)
      .def_readonly("support_size", &ExtremalityReport::support_size)
      .def_readonly("lower_bound", &ExtremalityReport::lower_bound)
      .def_readonly("upper_bound", &ExtremalityReport::upper_bound)
      .def_readonly("decomposition", &ExtremalityReport::decomposition)
      .def_readonly("phi0", &ExtremalityReport::phi0);

  m.def("is_extreme", &is_extreme, py::arg("b"), py::arg("sigma"),
        py::arg("embed_tol") = 1e-8);
  m.def("decomposition_oracle", &decomposition_oracle, py::arg("b"), py::arg("sigma"),
        py::arg("embed_tol") = 1e-8, py::arg("enforce_embedding") = true);
  m.def("theta_product", &theta_product, py::arg("theta"), py::arg("s1"), py::arg("s2"));
  m.def("theta_prime_fbp", &theta_prime_fbp, py::arg("theta"), py::arg("omega"));
  m.def("factor_witness", &factor_witness, py::arg("theta"), py::arg("omega"));

  m.def("to_json", [](const BlaschkeProduct& b) { return to_json(b).dump(); });
  m.def("to_json", [](const AtomicMeasure& s) { return to_json(s).dump(); });
  m.def("to_json", [](const RationalSchur& s) { return to_json(s).dump(); });
  m.def("blaschke_from_json",
        [](const std::string& text) { return blaschke_from_json(json::parse(text)); });
  m.def("measure_from_json",
        [](const std::string& text) { return measure_from_json(json::parse(text)); });
  m.def("schur_from_json",
        [](const std::string& text) { return schur_from_json(json::parse(text)); });
  m.def("measure_to_csv", &measure_to_csv, py::arg("sigma"));
}
