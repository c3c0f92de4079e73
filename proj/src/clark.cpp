#include "kbembed/clark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kbembed/errors.hpp"

namespace kbembed {

namespace {

// Upper bound for the phase speed of b * omega along the circle.
double phase_speed_bound(const BlaschkeProduct& b, const BlaschkeProduct& omega) {
  double bound = 0.0;
  for (const auto* prod : {&b, &omega})
    for (const auto& zk : prod->zeros())
      bound += zk.r * (1.0 + std::abs(zk.z)) / (1.0 - std::abs(zk.z));
  return bound;
}

double principal_arg(cplx z) { return std::arg(z); }

}  // namespace

std::vector<cplx> support_points(const BlaschkeProduct& b,
                                 const BlaschkeProduct& omega) {
  const int n = b.degree();
  const int m = omega.degree();
  if (n < 1) throw Error("support points require deg B >= 1");
  const int count = n + m;
  const double two_pi = 2.0 * M_PI;

  auto h = [&](double theta) { return b.eval(unit(theta)) * omega.eval(unit(theta)); };
  auto speed = [&](double theta) {
    return b.phase_speed(theta) + omega.phase_speed(theta);
  };

  // Sample densely enough that the phase advances less than pi/2 per step,
  // so principal-value increments unwrap exactly.
  int samples = 256;
  double need = 8.0 * std::max(1.0, phase_speed_bound(b, omega));
  while (samples < need) samples *= 2;

  for (int attempt = 0; attempt < 6; ++attempt, samples *= 2) {
    if (samples > (1 << 22))
      throw RootFindingFailure("phase sampling budget exhausted");
    std::vector<double> phase(samples + 1);
    std::vector<cplx> values(samples + 1);
    values[0] = h(0.0);
    phase[0] = principal_arg(values[0]);
    bool resolved = true;
    for (int i = 1; i <= samples; ++i) {
      double theta = two_pi * i / samples;
      values[i] = h(theta);
      double inc = principal_arg(values[i] / values[i - 1]);
      if (inc < -1e-9 || inc > 0.6 * M_PI) {
        resolved = false;  // step too coarse for this zero configuration
        break;
      }
      phase[i] = phase[i - 1] + std::max(inc, 0.0);
    }
    if (!resolved) continue;
    if (std::abs(phase[samples] - phase[0] - two_pi * count) > 1e-6) continue;

    // Roots sit where the unwrapped phase crosses multiples of 2*pi.
    long k_start = static_cast<long>(std::ceil((phase[0] - 1e-9) / two_pi));
    std::vector<cplx> roots;
    roots.reserve(count);
    for (int j = 0; j < count; ++j) {
      double target = two_pi * static_cast<double>(k_start + j);
      auto it = std::lower_bound(phase.begin(), phase.end(), target);
      if (it == phase.begin()) it = phase.begin() + 1;
      if (it == phase.end())
        throw RootFindingFailure("lost a phase crossing");
      std::size_t hi = static_cast<std::size_t>(it - phase.begin());
      double lo_theta = two_pi * (hi - 1) / samples;
      double hi_theta = two_pi * hi / samples;
      double lo_phase = phase[hi - 1];
      cplx lo_value = values[hi - 1];

      // Bisect on the locally unwrapped phase, then polish with Newton.
      double residual = target - lo_phase;  // in [0, step phase)
      double a = lo_theta, c = hi_theta;
      for (int iter = 0; iter < 60 && (c - a) > 1e-15; ++iter) {
        double mid = 0.5 * (a + c);
        double mid_phase = principal_arg(h(mid) / lo_value);
        if (mid_phase < residual)
          a = mid;
        else
          c = mid;
      }
      double theta = 0.5 * (a + c);
      for (int iter = 0; iter < 3; ++iter) {
        double err = principal_arg(h(theta) / lo_value) - residual;
        double d = speed(theta);
        if (d <= 0.0) break;
        theta -= err / d;
      }
      cplx t = unit(theta);
      if (std::abs(b.eval(t) * omega.eval(t) - 1.0) > tol::support_residual)
        throw RootFindingFailure("support point failed the residual check");
      roots.push_back(t);
    }
    std::sort(roots.begin(), roots.end(),
              [](cplx x, cplx y) { return arg_2pi(x) < arg_2pi(y); });
    return roots;
  }
  throw RootFindingFailure("phase unwrap failed after refinement");
}

double support_weight(const BlaschkeProduct& b, const BlaschkeProduct& omega,
                      cplx t) {
  if (std::abs(b.eval(t) * omega.eval(t) - 1.0) > tol::support_condition)
    throw NotSupportPoint("point does not satisfy B(t) w(t) = 1");
  double inv = 0.0;
  for (const auto* prod : {&b, &omega})
    for (const auto& zk : prod->zeros())
      inv += zk.r * (1.0 - std::norm(zk.z)) / std::norm(t - zk.z);
  return 1.0 / inv;
}

HerglotzData measure_from_schur(const BlaschkeProduct& b,
                                const BlaschkeProduct& omega) {
  std::vector<cplx> points = support_points(b, omega);
  std::vector<Atom> atoms;
  atoms.reserve(points.size());
  for (cplx t : points) atoms.push_back({t, support_weight(b, omega, t)});

  cplx u = b.eval(0.0) * omega.eval(0.0);
  double beta = 2.0 * std::imag(u) / std::norm(1.0 - u);

  HerglotzData out{beta, AtomicMeasure(std::move(atoms))};
  // Value of the Herglotz integral at the origin pins the total mass.
  double expected_mass = std::real((1.0 + u) / (1.0 - u));
  if (std::abs(out.measure.total_mass() - expected_mass) > 1e-10)
    throw RootFindingFailure("total mass disagrees with the Herglotz value at 0");
  return out;
}

HerglotzData measure_from_schur(const BlaschkeProduct& b,
                                const RationalSchur& omega) {
  return measure_from_schur(b, to_blaschke(omega));
}

SchurRecovery schur_from_measure(const BlaschkeProduct& b,
                                 const AtomicMeasure& sigma) {
  const int n = b.degree();
  if (n < 1) throw Error("recovery requires deg B >= 1");
  const auto& atoms = sigma.atoms();
  const int p = static_cast<int>(atoms.size());
  if (p < n)
    throw InconsistentMeasure("support smaller than deg B cannot embed");

  auto cayley_sum = [&](cplx z) {
    cplx acc{};
    for (const auto& a : atoms) acc += a.s * (a.t + z) / (a.t - z);
    return acc;
  };

  // F = i beta + sum s_j (t_j+z)/(t_j-z) must equal 1 at every zero of B.
  const cplx z1 = b.zeros().front().z;
  cplx s_at_z1 = cayley_sum(z1);
  if (std::abs(std::real(s_at_z1) - 1.0) > tol::support_condition)
    throw InconsistentMeasure("beta fails to be real at the first zero of B");
  const double beta = -std::imag(s_at_z1);

  auto herglotz = [&](cplx z) { return cplx{0.0, beta} + cayley_sum(z); };

  for (const auto& zk : b.zeros()) {
    if (std::abs(herglotz(zk.z) - 1.0) > tol::support_condition)
      throw InconsistentMeasure("Herglotz transform is not 1 at a zero of B");
    for (int l = 1; l < zk.r; ++l) {
      // l-th derivative: sum s_j 2 t_j l! / (t_j - z)^{l+1}.
      cplx deriv{};
      double fact = 1.0;
      for (int q = 2; q <= l; ++q) fact *= q;
      for (const auto& a : atoms)
        deriv += a.s * 2.0 * a.t * fact / std::pow(a.t - zk.z, l + 1);
      if (std::abs(deriv) > 1e-6)
        throw InconsistentMeasure("Herglotz derivative constraint fails at a multiple zero");
    }
  }

  // The analyticity constraints above force F(t) purely imaginary on the
  // circle, so omega = (F-1)/(B(F+1)) is inner of degree p - n. Its zeros
  // are the roots of F - 1 besides the zeros of B. The monomial form of
  // that numerator is only used for seeds; each survivor is polished by
  // Newton against the directly evaluated transform.
  Polynomial d = Polynomial::constant(1.0);
  for (const auto& a : atoms) d = d * Polynomial({a.t, -1.0});
  Polynomial n_minus = d * cplx(-1.0, beta);  // (i beta - 1) D
  for (const auto& a : atoms) {
    Polynomial deleted = Polynomial::constant(a.s);
    for (const auto& other : atoms) {
      if (&other == &a) continue;
      deleted = deleted * Polynomial({other.t, -1.0});
    }
    n_minus = n_minus + deleted * Polynomial({a.t, 1.0});
  }

  std::vector<cplx> seeds = n_minus.roots();
  for (const auto& zk : b.zeros()) {
    for (int i = 0; i < zk.r; ++i) {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t q = 0; q < seeds.size(); ++q) {
        double dist = std::abs(seeds[q] - zk.z);
        if (dist < best_d) {
          best_d = dist;
          best = q;
        }
      }
      if (seeds.empty() || best_d > 0.1)
        throw InconsistentMeasure("numerator misses a zero of B, measure not in S(B)");
      seeds.erase(seeds.begin() + static_cast<long>(best));
    }
  }

  auto herglotz_deriv = [&](cplx z) {
    cplx acc{};
    for (const auto& a : atoms) acc += a.s * 2.0 * a.t / std::pow(a.t - z, 2);
    return acc;
  };
  std::vector<cplx> zeros_of_omega;
  zeros_of_omega.reserve(seeds.size());
  for (cplx seed : seeds) {
    cplx x = seed;
    for (int it = 0; it < 8; ++it) {
      cplx fd = herglotz_deriv(x);
      if (std::abs(fd) < 1e-300) break;
      cplx step = (herglotz(x) - 1.0) / fd;
      if (std::abs(step) > 0.2) break;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (std::abs(x) >= 1.0)
      throw InconsistentMeasure("parameter zero escaped the disk, measure not in S(B)");
    zeros_of_omega.push_back(x);
  }

  BlaschkeProduct bare(cluster_roots(zeros_of_omega, 1e-6), 1.0);
  auto direct = [&](cplx z) {
    cplx f = herglotz(z);
    return (f - 1.0) / (b.eval(z) * (f + 1.0));
  };

  // Pin the front constant at a sample point away from zeros and poles.
  cplx gamma{};
  bool have_gamma = false;
  for (double radius : {0.43, 0.71}) {
    for (int i = 0; i < 8 && !have_gamma; ++i) {
      cplx z = radius * unit(0.5 + i * M_PI / 4.0);
      if (std::abs(b.eval(z)) < 1e-4) continue;
      cplx f = herglotz(z);
      if (std::abs(f + 1.0) < 1e-4) continue;
      cplx bare_val = bare.eval(z);
      if (std::abs(bare_val) < 1e-4) continue;
      gamma = direct(z) / bare_val;
      have_gamma = true;
    }
    if (have_gamma) break;
  }
  if (!have_gamma || std::abs(std::abs(gamma) - 1.0) > 1e-6)
    throw InconsistentMeasure("recovered parameter is not inner, measure not in S(B)");

  BlaschkeProduct omega_fbp(bare.zeros(), gamma / std::abs(gamma));
  RationalSchur omega = from_blaschke(omega_fbp);

  // Cross-check the assembled quotient against the direct transform.
  int checked = 0;
  for (double radius : {0.29, 0.61}) {
    for (int i = 0; i < 8; ++i) {
      cplx z = radius * unit(0.9 + i * M_PI / 4.0);
      if (std::abs(b.eval(z)) < 1e-4) continue;
      cplx f = herglotz(z);
      if (std::abs(f + 1.0) < 1e-4) continue;
      if (std::abs(omega.eval(z) - direct(z)) > 3e-7)
        throw InconsistentMeasure("recovered parameter fails the transform cross-check");
      ++checked;
    }
  }
  if (checked < 4)
    throw InconsistentMeasure("could not cross-check the recovered parameter");
  return {omega, beta};
}

AtomicMeasure clark_measure(const BlaschkeProduct& b, cplx alpha) {
  if (b.degree() < 1) throw Error("Clark measures require deg B >= 1");
  if (std::abs(std::abs(alpha) - 1.0) > tol::unimodular)
    throw Error("Clark parameter must be unimodular");
  return measure_from_schur(b, BlaschkeProduct(alpha / std::abs(alpha))).measure;
}

MaxMassResult max_mass(const BlaschkeProduct& b, cplx tau) {
  if (std::abs(std::abs(tau) - 1.0) > tol::unimodular)
    throw Error("extremal mass point must be unimodular");
  tau /= std::abs(tau);
  cplx alpha = std::conj(b.eval(tau));  // 1/B(tau)
  AtomicMeasure sigma = clark_measure(b, alpha);

  double inv = 0.0;
  for (const auto& zk : b.zeros())
    inv += zk.r * (1.0 - std::norm(zk.z)) / std::norm(tau - zk.z);
  double mass = 1.0 / inv;

  int idx = sigma.nearest_atom(tau);
  if (idx < 0 || std::abs(sigma.atoms()[idx].t - tau) > tol::atom_match ||
      std::abs(sigma.atoms()[idx].s - mass) > 1e-10)
    throw RootFindingFailure("extremal atom missing from the Clark measure");
  return {std::move(sigma), mass, alpha};
}

}  // namespace kbembed
