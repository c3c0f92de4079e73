#pragma once

#include "kbembed/blaschke.hpp"
#include "kbembed/polynomial.hpp"
#include "kbembed/types.hpp"

namespace kbembed {

// Rational function bounded by one in modulus on the closed disk,
// represented as a quotient of polynomials with the denominator root-free
// in the closed disk.
class RationalSchur {
 public:
  RationalSchur() : num_(Polynomial::constant(0.0)), den_(Polynomial::constant(1.0)) {}
  RationalSchur(Polynomial num, Polynomial den);

  static RationalSchur constant(cplx c) {
    return {Polynomial::constant(c), Polynomial::constant(1.0)};
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  cplx eval(cplx z) const { return num_.eval(z) / den_.eval(z); }

 private:
  Polynomial num_;
  Polynomial den_;
};

struct SchurCheck {
  bool ok = false;
  double max_modulus = 0.0;  // over the circle grid
  double min_modulus = 0.0;  // over the circle grid
  bool den_root_free = false;
};

// Membership test for the Schur class: sup |s| over a uniform circle grid
// (default 4096 points) within 1 + tol::schur_membership, and the
// denominator root-free in the closed disk.
SchurCheck schur_check(const RationalSchur& s, int grid = 4096);

// Inner within tolerance: the boundary modulus is identically 1 on the grid.
bool is_inner(const RationalSchur& s, int grid = 4096,
              double tolerance = tol::inner_boundary);

// B as the quotient gamma * Q / Q*.
RationalSchur from_blaschke(const BlaschkeProduct& b);

// Inverse direction: the function must be inner; its numerator roots in the
// open disk become the zeros. Throws NotFinitelySupported otherwise.
BlaschkeProduct to_blaschke(const RationalSchur& s);

// Groups nearby roots into (zero, multiplicity) pairs.
std::vector<BlaschkeZero> cluster_roots(const std::vector<cplx>& roots,
                                        double tolerance = 1e-7);

}  // namespace kbembed
