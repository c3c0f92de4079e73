#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kbembed/blaschke.hpp"
#include "kbembed/measure.hpp"
#include "kbembed/polynomial.hpp"
#include "kbembed/types.hpp"

namespace kbembed {

struct RationalFn {
  Polynomial num;
  Polynomial den;
  cplx eval(cplx z) const { return num.eval(z) / den.eval(z); }
};

enum class BasisKind { monomial_over_denominator, cauchy_kernel };

// Basis of the n-dimensional model space attached to B: rational functions
// with poles at the reflected zeros.
struct ModelBasis {
  std::vector<RationalFn> functions;
  BasisKind kind = BasisKind::monomial_over_denominator;
  std::size_t size() const { return functions.size(); }
};

// Default basis z^i / prod_j (1 - conj(z_j) z)^{r_j}, i = 0..n-1; uniform in
// the zero configuration. The Cauchy-kernel-power basis (cauchy_kernel) is
// available when B(0) = 0 and feeds the span construction below.
ModelBasis model_basis(const BlaschkeProduct& b,
                       BasisKind kind = BasisKind::monomial_over_denominator);

struct QuadratureOptions {
  int start_points = 256;      // power of two >= 64
  int max_points = 1 << 20;
  double target = tol::quadrature_target;
};

struct GramResult {
  Eigen::MatrixXcd gram;
  int points = 0;  // samples used by the final pass
};

// Gram matrix under the normalized Lebesgue measure: uniform trapezoid
// sampling on the circle, doubled until entrywise stabilization. Throws
// QuadratureNonConvergence past the sample budget.
GramResult gram_lebesgue(const ModelBasis& basis,
                         const QuadratureOptions& opts = {});

// Gram matrix under an atomic measure: sum_q s_q f_j(t_q) conj(f_k(t_q)).
Eigen::MatrixXcd gram_measure(const ModelBasis& basis,
                              const AtomicMeasure& sigma);

struct IsometryCertificate {
  double max_deviation = 0.0;  // entrywise max |gram_sigma - gram_lebesgue|
  Eigen::MatrixXcd gram_lebesgue;
  Eigen::MatrixXcd gram_sigma;
  int quadrature_points = 0;
  double tolerance = 0.0;
  bool passed = false;
  double lebesgue_condition = 0.0;  // spectral condition estimate
  bool ill_conditioned = false;     // condition above 1e12 (clustered zeros)
};

// Compares the two Gram matrices of the model space of b. When b(0) = 0 the
// deviation is also computed in the Cauchy-kernel basis and the larger
// reported, so the verdict does not depend on the basis choice.
IsometryCertificate verify_isometry(const BlaschkeProduct& b,
                                    const AtomicMeasure& sigma, double tolerance,
                                    const QuadratureOptions& opts = {});

// One real-valued circle function of the 2n-1 dimensional span E attached
// to a product with B(0) = 0: real/imaginary parts of Cauchy-kernel powers
// for the nonzero zeros, of monomials for the origin block, plus the
// constant.
struct ESpaceFunction {
  enum class Kind { constant, re_cauchy, im_cauchy, re_monomial, im_monomial };
  Kind kind = Kind::constant;
  cplx zero;     // pole parameter for the Cauchy kinds
  int power = 0; // j in phi_k^j or t^j

  double eval(cplx t) const;
};

// The 2n-1 functions spanning E. Throws RequiresZeroAtOrigin unless some
// zero of b lies at the origin (|z| <= 1e-12); callers apply the Mobius
// change of variables first.
std::vector<ESpaceFunction> e_space_functions(const BlaschkeProduct& b);

}  // namespace kbembed
