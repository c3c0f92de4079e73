#include "kbembed/extremal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "kbembed/clark.hpp"
#include "kbembed/errors.hpp"
#include "kbembed/model_space.hpp"
#include "kbembed/pick.hpp"

namespace kbembed {

Extremality is_extreme(const BlaschkeProduct& b, const AtomicMeasure& sigma,
                       double embed_tol) {
  IsometryCertificate cert = verify_isometry(b, sigma, embed_tol);
  if (!cert.passed)
    throw NotEmbedding("measure deviates by " + std::to_string(cert.max_deviation));
  const int n = b.degree();
  const int p = static_cast<int>(sigma.support_size());
  return (n <= p && p <= 2 * n - 1) ? Extremality::extreme
                                    : Extremality::not_extreme;
}

ExtremalityReport decomposition_oracle(const BlaschkeProduct& b,
                                       const AtomicMeasure& sigma,
                                       double embed_tol, bool enforce_embedding) {
  const int n = b.degree();
  if (n < 1) throw Error("oracle requires deg B >= 1");
  if (enforce_embedding) {
    IsometryCertificate cert = verify_isometry(b, sigma, embed_tol);
    if (!cert.passed)
      throw NotEmbedding("measure deviates by " + std::to_string(cert.max_deviation));
  }

  ExtremalityReport report;
  report.support_size = static_cast<int>(sigma.support_size());
  report.lower_bound = n;
  report.upper_bound = 2 * n - 1;

  // Reduce to a product vanishing at the origin; the change of variables
  // preserves support counts and extremality, and phi0 transfers atomwise.
  BlaschkeProduct reduced = b;
  std::vector<Atom> atoms = sigma.atoms();
  if (!b.vanishes_at_origin()) {
    cplx a = b.zeros().back().z;
    reduced = mobius_precompose(b, a);
    for (auto& atom : atoms) {
      cplx tau = (atom.t - a) / (1.0 - std::conj(a) * atom.t);
      atom.s *= (1.0 - std::norm(a)) / std::norm(atom.t - a);
      atom.t = tau / std::abs(tau);
    }
  }

  const auto funcs = e_space_functions(reduced);
  const int rows = static_cast<int>(funcs.size());
  const int p = static_cast<int>(atoms.size());
  Eigen::MatrixXd m(rows, p);
  for (int l = 0; l < rows; ++l)
    for (int q = 0; q < p; ++q) m(l, q) = funcs[l].eval(atoms[q].t) * atoms[q].s;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol::rank_cutoff * top) ++rank;

  if (rank >= p) {
    report.verdict = Extremality::extreme;
    return report;
  }

  // Nontrivial kernel: phi0 orthogonal to the span, scaled to sup-norm 1
  // with the peak entry pinned to +1 for determinism.
  Eigen::VectorXd phi = svd.matrixV().col(p - 1);
  int peak = 0;
  for (int q = 1; q < p; ++q)
    if (std::abs(phi(q)) > std::abs(phi(peak))) peak = q;
  phi /= phi(peak);

  std::vector<Atom> plus, minus;
  const auto& original = sigma.atoms();
  const double drop = 1e-12 * sigma.total_mass();
  for (int q = 0; q < p; ++q) {
    double wp = original[q].s * (1.0 + phi(q));
    double wm = original[q].s * (1.0 - phi(q));
    if (wp > drop) plus.push_back({original[q].t, wp});
    if (wm > drop) minus.push_back({original[q].t, wm});
  }
  report.verdict = Extremality::not_extreme;
  report.decomposition = {AtomicMeasure(std::move(plus)), AtomicMeasure(std::move(minus))};
  report.phi0 = std::vector<double>(phi.data(), phi.data() + p);

  if (enforce_embedding) {
    for (const auto* half : {&report.decomposition->first, &report.decomposition->second}) {
      IsometryCertificate cert = verify_isometry(b, *half, embed_tol);
      if (!cert.passed)
        throw RootFindingFailure("decomposition half fails the embedding check");
    }
  }
  return report;
}

RationalSchur theta_product(const BlaschkeProduct& theta, const RationalSchur& s1,
                            const RationalSchur& s2) {
  if (!schur_check(s1).ok || !schur_check(s2).ok)
    throw Error("theta product requires Schur-class operands");

  BlaschkeQuotient quo = to_quotient(theta);
  const Polynomial& qt = quo.q;
  const Polynomial qt_star = reversed(qt, theta.degree());
  const Polynomial& n1 = s1.num();
  const Polynomial& d1 = s1.den();
  const Polynomial& n2 = s2.num();
  const Polynomial& d2 = s2.den();

  // Equal operands reduce exactly: the product equals
  // s1 + (s2-s1)/2 * (1-theta s1)/(1-theta s0), so a vanishing cross
  // difference n2 d1 - n1 d2 collapses the correction term to zero.
  if ((n2 * d1 - n1 * d2).is_zero()) return s1;

  // Clear denominators in (s0 - theta s1 s2)/(1 - theta s0), s0 = (s1+s2)/2.
  Polynomial mixed = n1 * d2 + n2 * d1;  // 2 s0 d1 d2
  Polynomial num = qt_star * mixed - (qt * (n1 * n2)) * (2.0 * quo.gamma);
  Polynomial den = (qt_star * (d1 * d2)) * cplx{2.0} - (qt * mixed) * quo.gamma;
  num = num.trimmed(1e-12);
  den = den.trimmed(1e-12);
  if (den.is_zero())
    throw DenominatorVanishes("denominator vanishes identically");

  // Cancel shared factors: match roots pairwise, then deflate each matched
  // root out of its own polynomial after a fresh Newton polish, so the
  // surviving coefficients keep their raw precision.
  std::vector<cplx> num_roots = num.roots();
  std::vector<cplx> den_roots = den.roots();
  std::vector<bool> num_used(num_roots.size(), false);
  std::vector<cplx> num_matched, den_matched, den_kept;
  for (cplx r : den_roots) {
    int best = -1;
    double best_d = 1e-10 * std::max(1.0, std::abs(r));
    for (std::size_t i = 0; i < num_roots.size(); ++i) {
      if (num_used[i]) continue;
      double dist = std::abs(num_roots[i] - r);
      if (dist < best_d) {
        best_d = dist;
        best = static_cast<int>(i);
      }
    }
    if (best >= 0) {
      num_used[best] = true;
      num_matched.push_back(num_roots[best]);
      den_matched.push_back(r);
    } else {
      den_kept.push_back(r);
    }
  }

  for (cplx r : den_kept)
    if (std::abs(r) <= 1.0 - 1e-9)
      throw DenominatorVanishes("reduced denominator has a root in the closed disk");

  auto polish = [](const Polynomial& p, cplx x) {
    Polynomial dp = p.derivative();
    for (int it = 0; it < 6; ++it) {
      cplx d = dp.eval(x);
      if (std::abs(d) < 1e-300) break;
      cplx step = p.eval(x) / d;
      if (std::abs(step) > 0.3) break;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    return x;
  };
  Polynomial num_final = num;
  for (cplx r : num_matched) num_final = num_final.deflated(polish(num_final, r));
  Polynomial den_final = den;
  for (cplx r : den_matched) den_final = den_final.deflated(polish(den_final, r));

  RationalSchur out(num_final, den_final);
  if (!schur_check(out).ok)
    throw DenominatorVanishes("theta product left the Schur class; invalid operands");
  return out;
}

bool theta_prime_fbp(const BlaschkeProduct& theta, const BlaschkeProduct& omega) {
  if (theta.degree() < 1) throw Error("theta-primality requires deg theta >= 1");
  return omega.degree() <= theta.degree() - 1;
}

std::optional<std::pair<RationalSchur, RationalSchur>> factor_witness(
    const BlaschkeProduct& theta, const BlaschkeProduct& omega) {
  if (theta_prime_fbp(theta, omega)) return std::nullopt;

  HerglotzData data = measure_from_schur(theta, omega);
  ExtremalityReport report = decomposition_oracle(theta, data.measure);
  if (!report.decomposition)
    throw Error("oracle found no decomposition for a non-prime parameter");

  RationalSchur w1 = schur_from_measure(theta, report.decomposition->first).omega;
  RationalSchur w2 = schur_from_measure(theta, report.decomposition->second).omega;

  // The halves must reproduce omega under the product and differ from
  // each other.
  RationalSchur prod = theta_product(theta, w1, w2);
  double worst = 0.0, spread = 0.0;
  for (int ring = 0; ring < 2; ++ring) {
    double radius = ring == 0 ? 0.35 : 0.75;
    for (int i = 0; i < 32; ++i) {
      cplx z = radius * unit(2.0 * M_PI * i / 32.0);
      worst = std::max(worst, std::abs(prod.eval(z) - omega.eval(z)));
      spread = std::max(spread, std::abs(w1.eval(z) - w2.eval(z)));
    }
  }
  if (worst > 1e-7)
    throw RootFindingFailure("witness pair fails the product identity");
  if (spread <= 1e-7)
    throw RootFindingFailure("witness pair degenerated to equal factors");
  return std::make_pair(std::move(w1), std::move(w2));
}

}  // namespace kbembed
