#include "kbembed/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kbembed/errors.hpp"

namespace kbembed {

namespace {

Polynomial monomial(int i) {
  std::vector<cplx> c(static_cast<std::size_t>(i) + 1, cplx{});
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

Polynomial cauchy_denominator(cplx zero, int power) {
  Polynomial out = Polynomial::constant(1.0);
  for (int i = 0; i < power; ++i) out = out * Polynomial({1.0, -std::conj(zero)});
  return out;
}

const BlaschkeZero* origin_zero(const BlaschkeProduct& b) {
  for (const auto& zk : b.zeros())
    if (zk.z == cplx{}) return &zk;
  return nullptr;
}

}  // namespace

ModelBasis model_basis(const BlaschkeProduct& b, BasisKind kind) {
  const int n = b.degree();
  if (n < 1) throw Error("model space requires deg B >= 1");
  ModelBasis out;
  out.kind = kind;

  if (kind == BasisKind::monomial_over_denominator) {
    Polynomial den = Polynomial::constant(1.0);
    for (const auto& zk : b.zeros())
      if (zk.z != cplx{}) den = den * cauchy_denominator(zk.z, zk.r);
    for (int i = 0; i < n; ++i) out.functions.push_back({monomial(i), den});
    return out;
  }

  const BlaschkeZero* origin = origin_zero(b);
  if (!origin)
    throw RequiresZeroAtOrigin("the Cauchy-kernel basis needs B(0) = 0");
  for (const auto& zk : b.zeros()) {
    if (zk.z == cplx{}) continue;
    for (int j = 1; j <= zk.r; ++j)
      out.functions.push_back({Polynomial::constant(1.0), cauchy_denominator(zk.z, j)});
  }
  for (int j = 1; j < origin->r; ++j)
    out.functions.push_back({monomial(j), Polynomial::constant(1.0)});
  out.functions.push_back({Polynomial::constant(1.0), Polynomial::constant(1.0)});
  return out;
}

GramResult gram_lebesgue(const ModelBasis& basis, const QuadratureOptions& opts) {
  const int nb = static_cast<int>(basis.size());
  auto gram_at = [&](int points) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(nb, nb);
    Eigen::VectorXcd v(nb);
    for (int i = 0; i < points; ++i) {
      cplx t = unit(2.0 * M_PI * i / points);
      for (int j = 0; j < nb; ++j) v(j) = basis.functions[j].eval(t);
      g.noalias() += v * v.adjoint();
    }
    return (g / double(points)).eval();
  };

  int points = std::max(64, opts.start_points);
  Eigen::MatrixXcd prev = gram_at(points);
  while (2 * points <= opts.max_points) {
    points *= 2;
    Eigen::MatrixXcd cur = gram_at(points);
    // Stabilization is relative to the entry scale; near-circle zeros push
    // Gram entries far above 1 and an absolute target would sit below the
    // summation rounding floor.
    double scale = std::max(1.0, cur.cwiseAbs().maxCoeff());
    if ((cur - prev).cwiseAbs().maxCoeff() < opts.target * scale) return {cur, points};
    prev = cur;
  }
  throw QuadratureNonConvergence("circle quadrature did not stabilize");
}

Eigen::MatrixXcd gram_measure(const ModelBasis& basis, const AtomicMeasure& sigma) {
  const int nb = static_cast<int>(basis.size());
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(nb, nb);
  Eigen::VectorXcd v(nb);
  for (const auto& atom : sigma.atoms()) {
    for (int j = 0; j < nb; ++j) v(j) = basis.functions[j].eval(atom.t);
    g.noalias() += atom.s * v * v.adjoint();
  }
  return g;
}

IsometryCertificate verify_isometry(const BlaschkeProduct& b,
                                    const AtomicMeasure& sigma, double tolerance,
                                    const QuadratureOptions& opts) {
  if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
  IsometryCertificate cert;
  cert.tolerance = tolerance;

  ModelBasis basis = model_basis(b);
  GramResult leb = gram_lebesgue(basis, opts);
  cert.gram_lebesgue = leb.gram;
  cert.gram_sigma = gram_measure(basis, sigma);
  cert.quadrature_points = leb.points;
  cert.max_deviation = (cert.gram_sigma - cert.gram_lebesgue).cwiseAbs().maxCoeff();

  if (b.vanishes_at_origin() && b.degree() > 1) {
    // The verdict must not depend on the basis kind; recompute in the
    // Cauchy-kernel basis and keep the larger deviation.
    ModelBasis alt = model_basis(b, BasisKind::cauchy_kernel);
    GramResult leb2 = gram_lebesgue(alt, opts);
    double dev2 = (gram_measure(alt, sigma) - leb2.gram).cwiseAbs().maxCoeff();
    cert.max_deviation = std::max(cert.max_deviation, dev2);
    cert.quadrature_points = std::max(cert.quadrature_points, leb2.points);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(cert.gram_lebesgue);
  double lo = eig.eigenvalues().minCoeff();
  double hi = eig.eigenvalues().maxCoeff();
  cert.lebesgue_condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  cert.ill_conditioned = !(cert.lebesgue_condition < 1e12);

  cert.passed = cert.max_deviation <= tolerance;
  return cert;
}

double ESpaceFunction::eval(cplx t) const {
  auto ipow = [](cplx base, int e) {
    cplx acc{1.0};
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
  };
  switch (kind) {
    case Kind::constant: return 1.0;
    case Kind::re_cauchy: return std::real(ipow(1.0 / (1.0 - std::conj(zero) * t), power));
    case Kind::im_cauchy: return std::imag(ipow(1.0 / (1.0 - std::conj(zero) * t), power));
    case Kind::re_monomial: return std::real(ipow(t, power));
    case Kind::im_monomial: return std::imag(ipow(t, power));
  }
  return 0.0;
}

std::vector<ESpaceFunction> e_space_functions(const BlaschkeProduct& b) {
  const BlaschkeZero* origin = origin_zero(b);
  if (!origin)
    throw RequiresZeroAtOrigin("span construction needs B(0) = 0");
  std::vector<ESpaceFunction> out;
  out.reserve(2 * b.degree() - 1);
  for (const auto& zk : b.zeros()) {
    if (zk.z == cplx{}) continue;
    for (int j = 1; j <= zk.r; ++j) {
      out.push_back({ESpaceFunction::Kind::re_cauchy, zk.z, j});
      out.push_back({ESpaceFunction::Kind::im_cauchy, zk.z, j});
    }
  }
  for (int j = 1; j < origin->r; ++j) {
    out.push_back({ESpaceFunction::Kind::re_monomial, cplx{}, j});
    out.push_back({ESpaceFunction::Kind::im_monomial, cplx{}, j});
  }
  out.push_back({ESpaceFunction::Kind::constant, cplx{}, 0});
  return out;
}

}  // namespace kbembed
