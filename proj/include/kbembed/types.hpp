#pragma once

#include <complex>

namespace kbembed {

using cplx = std::complex<double>;

inline cplx unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Argument folded into [0, 2*pi).
double arg_2pi(cplx t);

// Central numeric tolerances, one to two orders above double rounding for
// products of degree <= 32.
namespace tol {
inline constexpr double unimodular = 1e-12;        // |t| = 1 acceptance
inline constexpr double schur_membership = 1e-10;  // sup-norm slack on the circle
inline constexpr double pole_proximity = 1e-13;    // eval refuses points this close to a pole
inline constexpr double rank_cutoff = 1e-9;        // relative singular-value threshold
inline constexpr double atom_distinct = 1e-9;      // minimal atom separation in a measure
inline constexpr double atom_match = 1e-8;         // atom agreement in round trips
inline constexpr double support_condition = 1e-8;  // |B(t)w(t) - 1| acceptance for weights
inline constexpr double support_residual = 1e-10;  // root-finder output residual
inline constexpr double quadrature_target = 1e-13; // Gram stabilization threshold
inline constexpr double inner_boundary = 1e-9;     // boundary-modulus slack for inner checks
}  // namespace tol

}  // namespace kbembed
