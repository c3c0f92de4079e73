#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kbembed/blaschke.hpp"
#include "kbembed/measure.hpp"
#include "kbembed/schur.hpp"
#include "kbembed/types.hpp"

namespace kbembed {

enum class Extremality { extreme, not_extreme };

struct ExtremalityReport {
  Extremality verdict = Extremality::extreme;
  int support_size = 0;
  int lower_bound = 0;  // n
  int upper_bound = 0;  // 2n - 1
  // Present iff not extreme: sigma = (plus + minus)/2 atomwise, both halves
  // embed isometrically, and phi0 is the kernel direction that produced
  // them (sup-norm 1, indexed like sigma's atoms).
  std::optional<std::pair<AtomicMeasure, AtomicMeasure>> decomposition;
  std::optional<std::vector<double>> phi0;
};

// Support-count classification: extreme iff n <= |supp sigma| <= 2n-1.
// Throws NotEmbedding when sigma fails verify_isometry at the tolerance.
Extremality is_extreme(const BlaschkeProduct& b, const AtomicMeasure& sigma,
                       double embed_tol = 1e-8);

// Independent classification through the explicit decomposition: reduce to
// B(0) = 0 by the Mobius change of variables, evaluate the 2n-1 span
// functions at the (transformed) atoms scaled by the weights, and look for
// a real kernel vector phi0. A nontrivial kernel yields the decomposition
// sigma_pm = (1 +- phi0) sigma; a trivial kernel certifies extremality.
// enforce_embedding guards the precondition sigma in S(B); cmd-level
// negative controls disable it and compare verdicts themselves.
ExtremalityReport decomposition_oracle(const BlaschkeProduct& b,
                                       const AtomicMeasure& sigma,
                                       double embed_tol = 1e-8,
                                       bool enforce_embedding = true);

// The binary Schur-class operation
//   (s1 o s2)_theta = (s0 - theta s1 s2)/(1 - theta s0),  s0 = (s1+s2)/2,
// assembled by polynomial arithmetic with common num/den roots cancelled.
// Throws DenominatorVanishes when the reduced denominator has a root in the
// closed disk (impossible for valid Schur inputs with nonconstant theta).
RationalSchur theta_product(const BlaschkeProduct& theta,
                            const RationalSchur& s1, const RationalSchur& s2);

// A finite Blaschke parameter is theta-prime exactly when its degree stays
// below deg theta.
bool theta_prime_fbp(const BlaschkeProduct& theta,
                     const BlaschkeProduct& omega);

// For a non-prime parameter, a nontrivial factorization witness
// (omega1, omega2) with theta_product(theta, omega1, omega2) = omega,
// obtained by decomposing the associated measure and mapping the halves
// back. Returns nothing when omega is prime.
std::optional<std::pair<RationalSchur, RationalSchur>> factor_witness(
    const BlaschkeProduct& theta, const BlaschkeProduct& omega);

}  // namespace kbembed
