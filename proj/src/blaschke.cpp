#include "kbembed/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "kbembed/errors.hpp"

namespace kbembed {

namespace {

void validate(const std::vector<BlaschkeZero>& zeros, cplx gamma) {
  if (std::abs(std::abs(gamma) - 1.0) > 1e-14)
    throw Error("front constant must be unimodular");
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (std::abs(zeros[i].z) >= 1.0)
      throw Error("Blaschke zeros must lie in the open disk");
    if (zeros[i].r < 1) throw Error("zero multiplicity must be positive");
    for (std::size_t j = i + 1; j < zeros.size(); ++j)
      if (zeros[i].z == zeros[j].z) throw Error("coincident zeros in divisor");
  }
}

// One factor of the product; the origin factor is plain z.
cplx factor(cplx zero, cplx z) {
  if (zero == cplx{}) return z;
  double m = std::abs(zero);
  return (m / zero) * (zero - z) / (1.0 - std::conj(zero) * z);
}

cplx pow_int(cplx base, int e) {
  cplx acc{1.0};
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(cplx gamma) : gamma_(gamma) {
  validate(zeros_, gamma_);
}

BlaschkeProduct::BlaschkeProduct(std::vector<BlaschkeZero> zeros, cplx gamma)
    : zeros_(std::move(zeros)), gamma_(gamma) {
  validate(zeros_, gamma_);
}

BlaschkeProduct BlaschkeProduct::monomial(int n) {
  if (n == 0) return BlaschkeProduct{};
  return BlaschkeProduct({{cplx{}, n}});
}

int BlaschkeProduct::degree() const {
  int n = 0;
  for (const auto& zk : zeros_) n += zk.r;
  return n;
}

bool BlaschkeProduct::vanishes_at_origin() const {
  return std::any_of(zeros_.begin(), zeros_.end(),
                     [](const BlaschkeZero& zk) { return zk.z == cplx{}; });
}

cplx BlaschkeProduct::eval(cplx z) const {
  for (const auto& zk : zeros_) {
    if (zk.z == cplx{}) continue;
    cplx pole = 1.0 / std::conj(zk.z);
    if (std::abs(z - pole) < tol::pole_proximity)
      throw PoleProximity("evaluation point within 1e-13 of a pole");
  }
  cplx acc = gamma_;
  for (const auto& zk : zeros_) acc *= pow_int(factor(zk.z, z), zk.r);
  return acc;
}

cplx BlaschkeProduct::log_derivative(cplx t) const {
  if (std::abs(std::abs(t) - 1.0) > tol::unimodular)
    throw Error("log derivative requires a unimodular point");
  // t B'/B = sum r_k (1-|z_k|^2) t / ((1 - conj(z_k) t)(t - z_k)).
  cplx acc{};
  for (const auto& zk : zeros_) {
    cplx term = (1.0 - std::norm(zk.z)) * t /
                ((1.0 - std::conj(zk.z) * t) * (t - zk.z));
    acc += double(zk.r) * term;
  }
  return acc;
}

double BlaschkeProduct::phase_speed(double theta) const {
  cplx t = unit(theta);
  double acc = 0.0;
  for (const auto& zk : zeros_) acc += zk.r * (1.0 - std::norm(zk.z)) / std::norm(t - zk.z);
  return acc;
}

BlaschkeProduct multiply(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  std::vector<BlaschkeZero> zeros = b1.zeros();
  for (const auto& zk : b2.zeros()) {
    auto hit = std::find_if(zeros.begin(), zeros.end(), [&](const BlaschkeZero& existing) {
      return std::abs(existing.z - zk.z) < 1e-12;
    });
    if (hit != zeros.end())
      hit->r += zk.r;
    else
      zeros.push_back(zk);
  }
  return BlaschkeProduct(std::move(zeros), b1.gamma() * b2.gamma());
}

BlaschkeQuotient to_quotient(const BlaschkeProduct& b) {
  // B = gamma_out Q/Q* with Q = prod (z_k - z)^{r_k}; each nonzero factor
  // contributes -|z_k|/z_k to the constant, the origin factor contributes 1.
  Polynomial q = Polynomial::constant(1.0);
  cplx gamma_out = b.gamma();
  for (const auto& zk : b.zeros()) {
    for (int i = 0; i < zk.r; ++i) q = q * Polynomial({zk.z, -1.0});
    if (zk.z != cplx{}) gamma_out *= pow_int(-std::abs(zk.z) / zk.z, zk.r);
  }
  gamma_out /= std::abs(gamma_out);
  return {gamma_out, q};
}

BlaschkeProduct mobius_precompose(const BlaschkeProduct& b, cplx a) {
  if (std::abs(a) >= 1.0) throw Error("Mobius parameter must lie in the open disk");
  std::vector<BlaschkeZero> zeros;
  zeros.reserve(b.zeros().size());
  for (const auto& zk : b.zeros()) {
    cplx w = (zk.z - a) / (1.0 - std::conj(a) * zk.z);
    if (std::abs(w) < 1e-14) w = cplx{};  // keep the origin factor exact
    zeros.push_back({w, zk.r});
  }
  BlaschkeProduct candidate(std::move(zeros), 1.0);
  // Fix the constant by matching the direct composition at one circle point.
  cplx t = unit(0.739085133215161);
  cplx direct = b.eval((t + a) / (1.0 + std::conj(a) * t));
  cplx ratio = direct / candidate.eval(t);
  return BlaschkeProduct(candidate.zeros(), ratio / std::abs(ratio));
}

}  // namespace kbembed
