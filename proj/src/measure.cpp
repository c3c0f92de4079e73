#include "kbembed/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kbembed/errors.hpp"

namespace kbembed {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (auto& a : atoms_) {
    double m = std::abs(a.t);
    if (std::abs(m - 1.0) > tol::unimodular)
      throw Error("atom position off the unit circle");
    a.t /= m;
    if (!(a.s > 0.0)) throw Error("atom weight must be positive");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& x, const Atom& y) { return arg_2pi(x.t) < arg_2pi(y.t); });
  for (std::size_t i = 0; i + 1 < atoms_.size(); ++i)
    if (std::abs(atoms_[i].t - atoms_[i + 1].t) <= tol::atom_distinct)
      throw Error("coincident atoms in measure");
  if (atoms_.size() >= 2 &&
      std::abs(atoms_.front().t - atoms_.back().t) <= tol::atom_distinct)
    throw Error("coincident atoms in measure");
}

double AtomicMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.s;
  return m;
}

int AtomicMeasure::nearest_atom(cplx t) const {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    double d = std::abs(atoms_[i].t - t);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

AtomicMeasure mobius_pushforward(const AtomicMeasure& sigma, cplx a) {
  if (std::abs(a) >= 1.0) throw Error("Mobius parameter must lie in the open disk");
  std::vector<Atom> atoms;
  atoms.reserve(sigma.atoms().size());
  for (const auto& atom : sigma.atoms()) {
    cplx tau = (atom.t - a) / (1.0 - std::conj(a) * atom.t);
    double w = atom.s * (1.0 - std::norm(a)) / std::norm(atom.t - a);
    atoms.push_back({tau, w});
  }
  return AtomicMeasure(std::move(atoms));
}

bool measures_match(const AtomicMeasure& lhs, const AtomicMeasure& rhs,
                    double pos_tol, double weight_tol) {
  if (lhs.support_size() != rhs.support_size()) return false;
  std::vector<bool> used(rhs.atoms().size(), false);
  for (const auto& a : lhs.atoms()) {
    bool matched = false;
    for (std::size_t j = 0; j < rhs.atoms().size(); ++j) {
      if (used[j]) continue;
      if (std::abs(rhs.atoms()[j].t - a.t) <= pos_tol &&
          std::abs(rhs.atoms()[j].s - a.s) <= weight_tol) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace kbembed
