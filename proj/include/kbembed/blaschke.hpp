#pragma once

#include <vector>

#include "kbembed/polynomial.hpp"
#include "kbembed/types.hpp"

namespace kbembed {

struct BlaschkeZero {
  cplx z;  // |z| < 1
  int r;   // multiplicity >= 1
};

// Finite Blaschke product
//
//   B(z) = gamma * prod_k ( |z_k|/z_k * (z_k - z)/(1 - conj(z_k) z) )^{r_k},
//
// stored as its zero divisor plus the free unimodular front constant gamma.
// The factor for a zero at the origin is plain z. Degree 0 is the unimodular
// constant gamma. Zeros are kept in zero form; coefficient expansion happens
// only on demand via to_quotient().
class BlaschkeProduct {
 public:
  BlaschkeProduct() : gamma_(1.0) {}
  explicit BlaschkeProduct(cplx gamma);
  BlaschkeProduct(std::vector<BlaschkeZero> zeros, cplx gamma = 1.0);

  static BlaschkeProduct monomial(int n);  // B(z) = z^n

  int degree() const;
  const std::vector<BlaschkeZero>& zeros() const { return zeros_; }
  cplx gamma() const { return gamma_; }
  bool vanishes_at_origin() const;

  // Throws PoleProximity when z is within tol::pole_proximity of a pole.
  cplx eval(cplx z) const;

  // t * B'(t)/B(t) for |t| = 1. Equals sum_k r_k (1 - |z_k|^2)/|t - z_k|^2,
  // a strictly positive real for degree >= 1.
  cplx log_derivative(cplx t) const;

  // Real-valued phase speed at e^{i theta}: Re(t B'/B), cheap form of the
  // sum above used by the circle root finder.
  double phase_speed(double theta) const;

 private:
  std::vector<BlaschkeZero> zeros_;
  cplx gamma_;
};

BlaschkeProduct multiply(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

struct BlaschkeQuotient {
  cplx gamma;    // unimodular
  Polynomial q;  // prod_k (z_k - z)^{r_k}
};

// B(z) = gamma * Q(z)/Q*(z) with Q* = reversed(Q, deg B).
BlaschkeQuotient to_quotient(const BlaschkeProduct& b);

// B composed with the disk automorphism b_a(z) = (z + a)/(1 + conj(a) z).
// The result has zeros (z_k - a)/(1 - conj(a) z_k) and the same degree.
BlaschkeProduct mobius_precompose(const BlaschkeProduct& b, cplx a);

}  // namespace kbembed
