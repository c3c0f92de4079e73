#pragma once

#include <vector>

#include "kbembed/blaschke.hpp"
#include "kbembed/measure.hpp"
#include "kbembed/schur.hpp"
#include "kbembed/types.hpp"

namespace kbembed {

// All circle points with B(t) * omega(t) = 1, sorted by argument in
// [0, 2*pi). There are exactly deg B + deg omega of them; the finder walks
// the strictly increasing phase of B*omega and bisects each 2*pi crossing,
// then polishes with Newton on the phase.
std::vector<cplx> support_points(const BlaschkeProduct& b,
                                 const BlaschkeProduct& omega);

// Weight carried at a support point t:
//   1/s = sum_k r_k (1-|z_k|^2)/|t-z_k|^2 + sum_j (1-|w_j|^2)/|t-w_j|^2
// over the zeros of b and of omega. Throws NotSupportPoint when t fails the
// support condition.
double support_weight(const BlaschkeProduct& b, const BlaschkeProduct& omega,
                      cplx t);

// The measure and real constant representing (1 + B w)/(1 - B w) as a
// Herglotz function; beta = 2 Im(w(0) B(0)) / |1 - B(0) w(0)|^2.
HerglotzData measure_from_schur(const BlaschkeProduct& b,
                                const BlaschkeProduct& omega);

// Same, for a rational Schur parameter: requires the parameter to be inner
// (throws NotFinitelySupported otherwise).
HerglotzData measure_from_schur(const BlaschkeProduct& b,
                                const RationalSchur& omega);

struct SchurRecovery {
  RationalSchur omega;
  double beta = 0.0;
};

// Inverse of measure_from_schur: from sigma in S(B), recover the Schur
// parameter omega = (F - 1)/(B (F + 1)) with F the Herglotz transform, and
// the real constant beta fixed by F = 1 at the zeros of B. Throws
// InconsistentMeasure when the analyticity constraints fail, which signals
// sigma not in S(B).
SchurRecovery schur_from_measure(const BlaschkeProduct& b,
                                 const AtomicMeasure& sigma);

// Aleksandrov-Clark measure for the unimodular constant parameter alpha;
// exactly deg B atoms.
AtomicMeasure clark_measure(const BlaschkeProduct& b, cplx alpha);

struct MaxMassResult {
  AtomicMeasure sigma;  // the maximizing measure, a Clark measure
  double mass = 0.0;    // its weight at tau
  cplx alpha;           // conj(B(tau))
};

// Largest point mass any measure of S_f(B) can place at tau, attained by
// the Clark measure with alpha = 1/B(tau).
MaxMassResult max_mass(const BlaschkeProduct& b, cplx tau);

}  // namespace kbembed
