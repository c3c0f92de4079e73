#include "kbembed/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kbembed/errors.hpp"

namespace kbembed {

RationalSchur::RationalSchur(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
}

SchurCheck schur_check(const RationalSchur& s, int grid) {
  SchurCheck result;
  result.max_modulus = 0.0;
  result.min_modulus = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    cplx t = unit(2.0 * M_PI * i / grid);
    double m = std::abs(s.eval(t));
    result.max_modulus = std::max(result.max_modulus, m);
    result.min_modulus = std::min(result.min_modulus, m);
  }
  result.den_root_free = true;
  for (cplx r : s.den().roots()) {
    if (std::abs(r) <= 1.0 - 1e-9) {
      result.den_root_free = false;
      break;
    }
  }
  result.ok = result.den_root_free &&
              result.max_modulus <= 1.0 + tol::schur_membership;
  return result;
}

bool is_inner(const RationalSchur& s, int grid, double tolerance) {
  SchurCheck chk = schur_check(s, grid);
  return chk.ok && chk.min_modulus >= 1.0 - tolerance &&
         chk.max_modulus <= 1.0 + tolerance;
}

RationalSchur from_blaschke(const BlaschkeProduct& b) {
  BlaschkeQuotient quo = to_quotient(b);
  return {quo.q * quo.gamma, reversed(quo.q, quo.q.degree())};
}

std::vector<BlaschkeZero> cluster_roots(const std::vector<cplx>& roots,
                                        double tolerance) {
  // Multiple roots come back from the solver as split clusters; the cluster
  // centroid cancels the leading splitting error.
  std::vector<BlaschkeZero> out;
  for (cplx r : roots) {
    auto hit = std::find_if(out.begin(), out.end(), [&](const BlaschkeZero& zk) {
      return std::abs(zk.z - r) < tolerance;
    });
    if (hit != out.end()) {
      hit->z = (hit->z * double(hit->r) + r) / double(hit->r + 1);
      hit->r += 1;
    } else {
      out.push_back({r, 1});
    }
  }
  // Snap near-origin clusters so the origin factor convention applies.
  for (auto& zk : out)
    if (std::abs(zk.z) < 1e-11) zk.z = cplx{};
  return out;
}

BlaschkeProduct to_blaschke(const RationalSchur& s) {
  if (!is_inner(s))
    throw NotFinitelySupported("parameter is not inner, measure has no finite support");
  Polynomial num = s.num().trimmed(1e-12);
  std::vector<cplx> inside;
  for (cplx r : num.roots()) {
    if (std::abs(r) < 1.0)
      inside.push_back(r);
    else
      throw NotFinitelySupported("inner conversion found a numerator root outside the disk");
  }
  BlaschkeProduct candidate(cluster_roots(inside), 1.0);
  cplx t = unit(0.739085133215161);
  cplx ratio = s.eval(t) / candidate.eval(t);
  BlaschkeProduct out(candidate.zeros(), ratio / std::abs(ratio));
  // Spot-check the conversion.
  for (double theta : {0.31, 2.17, 4.03}) {
    cplx p = 0.37 * unit(theta);
    if (std::abs(out.eval(p) - s.eval(p)) > 1e-8)
      throw NotFinitelySupported("inner conversion failed evaluation check");
  }
  return out;
}

}  // namespace kbembed
