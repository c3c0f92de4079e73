#include "kbembed/pick.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <limits>
#include <random>
#include <string>

#include "kbembed/errors.hpp"
#include "kbembed/schur.hpp"

namespace kbembed {

namespace {

void check_distinct(const std::vector<cplx>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) <= 1e-10)
        throw DuplicateNodes("interpolation nodes coincide");
}

// Rows of the realified homogeneous system: one complex equation
// sum_i (alpha_i a_i + beta_i conj(a_i)) = 0 becomes two real rows over
// (Re a_0, Im a_0, ..., Re a_m, Im a_m).
void append_realified(Eigen::MatrixXd& sys, int row, const std::vector<cplx>& alpha,
                      const std::vector<cplx>& beta) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    cplx sum = alpha[i] + beta[i];
    cplx dif = alpha[i] - beta[i];
    sys(row, 2 * i) = std::real(sum);
    sys(row, 2 * i + 1) = -std::imag(dif);
    sys(row + 1, 2 * i) = std::imag(sum);
    sys(row + 1, 2 * i + 1) = std::real(dif);
  }
}

Polynomial poly_from_direction(const Eigen::VectorXd& x) {
  std::vector<cplx> c(x.size() / 2);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = {x(2 * i), x(2 * i + 1)};
  return Polynomial(std::move(c));
}

// Assembles the product from clustered zeros and pins the constant to one
// interpolation target.
BlaschkeProduct assemble_with_gamma(std::vector<BlaschkeZero> zeros,
                                    const std::vector<cplx>& nodes,
                                    const std::vector<cplx>& values) {
  BlaschkeProduct bare(std::move(zeros), 1.0);
  std::size_t pin = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    double m = std::abs(bare.eval(nodes[j]));
    if (m > best) {
      best = m;
      pin = j;
    }
  }
  if (!(best > 0.0)) throw ValidationFailure("candidate vanishes at every node");
  cplx gamma = values[pin] / bare.eval(nodes[pin]);
  return BlaschkeProduct(bare.zeros(), gamma / std::abs(gamma));
}

}  // namespace

Eigen::MatrixXcd pick_matrix(const std::vector<cplx>& nodes,
                             const std::vector<cplx>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw Error("node and value lists must be nonempty and equal length");
  for (cplx z : nodes)
    if (std::abs(z) >= 1.0) throw Error("Pick nodes must lie in the open disk");
  check_distinct(nodes);
  const int n = static_cast<int>(nodes.size());
  Eigen::MatrixXcd p(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      p(j, k) = (1.0 - std::conj(values[j]) * values[k]) /
                (1.0 - std::conj(nodes[j]) * nodes[k]);
  return p;
}

Solvability solvability(const Eigen::MatrixXcd& pick, double tolerance) {
  if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(pick, Eigen::EigenvaluesOnly);
  Solvability out;
  out.min_eigenvalue = eig.eigenvalues().minCoeff();
  out.norm = eig.eigenvalues().cwiseAbs().maxCoeff();
  out.margin = out.norm > 0.0 ? out.min_eigenvalue / out.norm : 0.0;
  // Absolute floor handles the numerically-zero matrix of constant
  // unimodular data.
  out.solvable = out.min_eigenvalue >= -tolerance * std::max(out.norm, 1.0);
  return out;
}

namespace {

// Shared cutoff: relative to the top singular value, with an absolute floor
// so a numerically-zero matrix (constant unimodular data) reports rank 0.
template <typename Matrix>
int rank_of(const Matrix& m, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(m);
  double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double cutoff = std::max(rel_tol * top, 1e-12);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  return rank;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  return rank_of(m, rel_tol);
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  return rank_of(m, rel_tol);
}

Uniqueness uniqueness(const Eigen::MatrixXcd& pick, double tolerance) {
  Uniqueness out;
  out.rank = numerical_rank(pick, tolerance);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pick);
  const auto& sv = svd.singularValues();
  out.smallest_ratio = sv.size() && sv(0) > 0.0 ? sv(sv.size() - 1) / sv(0) : 0.0;
  out.unique = out.rank < pick.rows();
  return out;
}

BlaschkeProduct recover_fbp(const std::vector<cplx>& nodes,
                            const std::vector<cplx>& values, int max_degree) {
  Eigen::MatrixXcd p = pick_matrix(nodes, values);
  Solvability solv = solvability(p, tol::rank_cutoff);
  if (!solv.solvable)
    throw Error("interpolation data unsolvable in the Schur class");
  const int count = static_cast<int>(nodes.size());
  const int m = numerical_rank(p, tol::rank_cutoff);
  if (m == count)
    throw NotUnique("full-rank Pick matrix: interpolant underdetermined");
  if (m > max_degree)
    throw Error("numerical rank " + std::to_string(m) + " exceeds max degree");

  // w_j P*(z_j) - P(z_j) = 0 with P* the degree-m reflection of P.
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(2 * count, 2 * (m + 1));
  std::vector<cplx> alpha(m + 1), beta(m + 1);
  for (int j = 0; j < count; ++j) {
    cplx zp = 1.0;
    for (int i = 0; i <= m; ++i) {
      alpha[i] = -zp;  // coefficient of a_i from -P(z_j)
      zp *= nodes[j];
    }
    zp = 1.0;
    for (int i = m; i >= 0; --i) {
      beta[i] = values[j] * zp;  // conj(a_i) z_j^{m-i} from w_j P*(z_j)
      zp *= nodes[j];
    }
    append_realified(sys, 2 * j, alpha, beta);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int cols = static_cast<int>(sys.cols());
  const double top = sv(0);
  std::string failure = "no kernel direction validated";
  for (int idx = cols - 1; idx >= 0; --idx) {
    // Walk directions from the least singular upward; stop once clearly
    // outside the kernel (the smallest one is always tried).
    if (idx < cols - 1 && top > 0.0 && sv(idx) > tol::rank_cutoff * top) break;
    try {
      Polynomial cand = poly_from_direction(svd.matrixV().col(idx)).trimmed(1e-10);
      if (cand.degree() != m) {
        failure = "kernel direction degenerates below the target degree";
        continue;
      }
      std::vector<cplx> roots = cand.roots();
      bool inside = std::all_of(roots.begin(), roots.end(),
                                [](cplx r) { return std::abs(r) < 1.0 - 1e-10; });
      if (!inside) {
        failure = "kernel direction has roots on or outside the circle";
        continue;
      }
      BlaschkeProduct out = assemble_with_gamma(cluster_roots(roots), nodes, values);
      bool match = true;
      for (int j = 0; j < count && match; ++j)
        match = std::abs(out.eval(nodes[j]) - values[j]) <= 1e-8;
      if (match) return out;
      failure = "kernel direction fails the interpolation residuals";
    } catch (const Error&) {
      failure = "kernel direction failed during validation";
    }
  }
  throw ValidationFailure(failure);
}

BlaschkeProduct boundary_fbp_interpolation(const std::vector<cplx>& nodes,
                                           const std::vector<cplx>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw Error("node and value lists must be nonempty and equal length");
  std::vector<cplx> t(nodes), w(values);
  for (auto* list : {&t, &w})
    for (cplx& v : *list) {
      if (std::abs(std::abs(v) - 1.0) > tol::unimodular)
        throw Error("boundary interpolation needs unimodular nodes and values");
      v /= std::abs(v);
    }
  check_distinct(t);
  const int p = static_cast<int>(t.size());

  for (int q = p - 1; q >= 0; --q) {
    // P(t_j) - w_j t_j^q conj(P(t_j)) = 0, unknowns a_0..a_q.
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(2 * p, 2 * (q + 1));
    std::vector<cplx> alpha(q + 1), beta(q + 1);
    for (int j = 0; j < p; ++j) {
      cplx tp = 1.0;
      for (int i = 0; i <= q; ++i) {
        alpha[i] = tp;
        tp *= t[j];
      }
      for (int i = 0; i <= q; ++i)
        beta[i] = -w[j] * std::pow(t[j], static_cast<double>(q - i));
      append_realified(sys, 2 * j, alpha, beta);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double top = sv(0);
    const int cols = static_cast<int>(sys.cols());

    std::vector<Eigen::VectorXd> directions;
    for (int idx = cols - 1; idx >= 0; --idx) {
      bool in_kernel = top <= 0.0 || sv(idx) <= 1e-8 * top;
      if (!in_kernel && idx == cols - 1)
        in_kernel = true;  // always try the least-singular direction
      if (in_kernel) directions.push_back(svd.matrixV().col(idx));
    }
    // The kernel usually has dimension p and isolated basis vectors rarely
    // keep every root inside the disk; scan pairwise combinations and
    // seeded random points of the kernel sphere, then locally shrink the
    // worst root modulus around the best direction found.
    const std::size_t single = directions.size();
    for (std::size_t i = 0; i < single; ++i)
      for (std::size_t j = i + 1; j < single; ++j) {
        directions.push_back((directions[i] + directions[j]).normalized());
        directions.push_back((directions[i] - directions[j]).normalized());
      }
    if (single > 1) {
      // Excess of the worst root over the (slightly fattened) closed disk;
      // zero means every root is inside or cancellable on the circle.
      auto score = [](const Eigen::VectorXd& x) {
        Polynomial cand = poly_from_direction(x).trimmed(1e-9);
        if (cand.is_zero()) return std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (cplx r : cand.roots()) worst = std::max(worst, std::abs(r) - (1.0 + 1e-8));
        return worst;
      };
      std::mt19937_64 rng(0x5eedu + 77u * static_cast<unsigned>(q));
      std::normal_distribution<double> gauss;
      auto random_mix = [&]() {
        Eigen::VectorXd mix = Eigen::VectorXd::Zero(cols);
        for (std::size_t i = 0; i < single; ++i) mix += gauss(rng) * directions[i];
        double norm = mix.norm();
        return norm > 1e-12 ? Eigen::VectorXd(mix / norm) : directions[0];
      };
      std::vector<std::pair<double, Eigen::VectorXd>> pool;
      bool have_valid = false;
      for (const auto& dir : directions) {
        pool.emplace_back(score(dir), dir);
        have_valid = have_valid || pool.back().first <= 0.0;
      }
      for (int draw = 0; draw < 400 && !have_valid; ++draw) {
        Eigen::VectorXd x = random_mix();
        pool.emplace_back(score(x), x);
        have_valid = pool.back().first <= 0.0;
      }
      std::stable_sort(pool.begin(), pool.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      const std::size_t starts = std::min<std::size_t>(4, pool.size());
      for (std::size_t s0 = 0; s0 < starts && pool[0].first > 0.0; ++s0) {
        Eigen::VectorXd best = pool[s0].second;
        double best_score = pool[s0].first;
        for (double spread : {0.5, 0.2, 0.08, 0.03, 0.01}) {
          for (int it = 0; it < 150 && best_score > 0.0; ++it) {
            Eigen::VectorXd x = (best + spread * random_mix()).normalized();
            double s = score(x);
            if (s < best_score) {
              best_score = s;
              best = x;
            }
          }
        }
        if (best_score <= 0.0) {
          pool[0] = {best_score, best};
          break;
        }
      }
      if (pool[0].first <= 0.0) directions.insert(directions.begin(), pool[0].second);
    }

    std::optional<BlaschkeProduct> best;
    for (const auto& dir : directions) {
      try {
        Polynomial cand = poly_from_direction(dir).trimmed(1e-9);
        if (cand.is_zero()) continue;
        std::vector<cplx> inside;
        bool valid = true;
        for (cplx r : cand.roots()) {
          double mod = std::abs(r);
          if (mod < 1.0 - 1e-8)
            inside.push_back(r);
          else if (mod > 1.0 + 1e-8)
            valid = false;  // reflected pole would enter the disk
          // circle roots cancel against the reflection and drop out
          if (!valid) break;
        }
        if (!valid) continue;
        BlaschkeProduct out = assemble_with_gamma(cluster_roots(inside), t, w);
        bool match = true;
        for (int j = 0; j < p && match; ++j)
          match = std::abs(out.eval(t[j]) - w[j]) <= 1e-8;
        if (!match) continue;
        if (!best || out.degree() < best->degree()) best = out;
      } catch (const Error&) {
        continue;
      }
    }
    if (best) return *best;
  }
  throw InterpolationFailure("no kernel direction yields a valid interpolant");
}

}  // namespace kbembed
