#include "kbembed/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "kbembed/errors.hpp"

namespace kbembed {

double arg_2pi(cplx t) {
  double a = std::arg(t);
  if (a < 0.0) a += 2.0 * M_PI;
  if (a >= 2.0 * M_PI) a -= 2.0 * M_PI;
  return a;
}

namespace {

void strip_trailing_zeros(std::vector<cplx>& c) {
  while (!c.empty() && c.back() == cplx{}) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, cplx leading) {
  std::vector<cplx> c{leading};
  for (cplx r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] *= -r;
  }
  return Polynomial(std::move(c));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx Polynomial::eval(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<cplx> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = double(i) * coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<cplx> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<cplx> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<cplx> c(coeffs_.size() + rhs.coeffs_.size() - 1, cplx{});
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(cplx scalar) const {
  std::vector<cplx> c(coeffs_);
  for (cplx& v : c) v *= scalar;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::deflated(cplx root, double* remainder) const {
  if (coeffs_.empty()) {
    if (remainder) *remainder = 0.0;
    return {};
  }
  const double scale = std::max(max_abs_coeff(), 1e-300);
  std::vector<cplx> q(coeffs_.size() - 1);
  if (std::abs(root) <= 1.0) {
    // Forward synthetic division, stable for roots in the closed disk.
    cplx carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
      q[i - 1] = carry;
      carry = coeffs_[i - 1] + root * carry;
    }
    if (remainder) *remainder = std::abs(carry) / scale;
  } else {
    // Backward recurrence, stable for roots outside the disk.
    cplx prev{};
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
      cplx cur = (prev - coeffs_[i]) / root;
      q[i] = cur;
      prev = cur;
    }
    if (remainder) *remainder = std::abs(prev - coeffs_.back()) / scale;
  }
  return Polynomial(std::move(q));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  double cutoff = rel_tol * max_abs_coeff();
  std::vector<cplx> c(coeffs_);
  while (!c.empty() && std::abs(c.back()) <= cutoff) c.pop_back();
  return Polynomial(std::move(c));
}

std::vector<cplx> Polynomial::roots() const {
  int n = degree();
  if (n <= 0) return {};
  // Companion matrix of the monic rescaling.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs_[i] / coeffs_.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success)
    throw RootFindingFailure("companion eigenvalue iteration failed");

  Polynomial deriv = derivative();
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) {
    cplx x = solver.eigenvalues()[i];
    // Newton polish; a no-op near multiple roots where p' is tiny.
    for (int it = 0; it < 3; ++it) {
      cplx d = deriv.eval(x);
      if (std::abs(d) < 1e-300) break;
      cplx step = eval(x) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 0.5) break;
      x -= step;
    }
    out[i] = x;
  }
  return out;
}

Polynomial reversed(const Polynomial& q, int m) {
  if (m < q.degree())
    throw DegreeMismatch("reflection order below polynomial degree");
  std::vector<cplx> c(static_cast<std::size_t>(m) + 1, cplx{});
  for (int k = 0; k <= m; ++k) c[k] = std::conj(q.coeff(m - k));
  return Polynomial(std::move(c));
}

}  // namespace kbembed
