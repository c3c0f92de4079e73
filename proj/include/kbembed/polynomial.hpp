#pragma once

#include <cstddef>
#include <vector>

#include "kbembed/types.hpp"

namespace kbembed {

// Dense polynomial with complex coefficients, ascending degree order.
// Normalized: the trailing coefficient is nonzero, the zero polynomial is
// the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs);

  static Polynomial constant(cplx c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({0.0, 1.0}); }  // z
  static Polynomial from_roots(const std::vector<cplx>& roots, cplx leading = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : cplx{}; }
  cplx leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }
  double max_abs_coeff() const;

  cplx eval(cplx z) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(cplx scalar) const;

  // Synthetic division by (z - root). The remainder magnitude, relative to
  // the largest coefficient, is written to *remainder when given.
  Polynomial deflated(cplx root, double* remainder = nullptr) const;

  // Drops trailing coefficients below rel_tol * max |coeff|.
  Polynomial trimmed(double rel_tol) const;

  // All complex roots: companion-matrix eigenvalues polished by Newton steps.
  std::vector<cplx> roots() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<cplx> coeffs_;
};

// z^m * conj(Q(1/conj(z))): reversed, conjugated coefficients padded to
// length m + 1. Throws DegreeMismatch when m < deg Q.
Polynomial reversed(const Polynomial& q, int m);

}  // namespace kbembed
