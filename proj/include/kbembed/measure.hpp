#pragma once

#include <vector>

#include "kbembed/types.hpp"

namespace kbembed {

struct Atom {
  cplx t;    // unimodular position
  double s;  // positive weight
};

// Finitely supported positive measure on the unit circle. Atoms are kept
// sorted by argument in [0, 2*pi); positions are renormalized to exact unit
// modulus on construction. Distinctness and positivity are enforced.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  double total_mass() const;

  // Index of the atom closest to t in chordal distance, or -1 when empty.
  int nearest_atom(cplx t) const;

 private:
  std::vector<Atom> atoms_;
};

// The pair (beta, sigma) representing a Herglotz function
// i*beta + integral (t+z)/(t-z) dsigma(t).
struct HerglotzData {
  double beta = 0.0;
  AtomicMeasure measure;
};

// Image of sigma under the change of variables z -> b_a(z) = (z+a)/(1+conj(a)z):
// atoms move to (t - a)/(1 - conj(a) t), weights pick up (1-|a|^2)/|t-a|^2.
AtomicMeasure mobius_pushforward(const AtomicMeasure& sigma, cplx a);

// True when every atom of lhs matches an atom of rhs within the given
// position (chordal) and weight tolerances, and vice versa.
bool measures_match(const AtomicMeasure& lhs, const AtomicMeasure& rhs,
                    double pos_tol = tol::atom_match,
                    double weight_tol = tol::atom_match);

}  // namespace kbembed
