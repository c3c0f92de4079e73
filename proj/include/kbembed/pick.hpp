#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kbembed/blaschke.hpp"
#include "kbembed/types.hpp"

namespace kbembed {

// Interpolation data: nodes, targets and (for interior systems) the derived
// Hermitian Pick matrix.
struct PickSystem {
  std::vector<cplx> nodes;
  std::vector<cplx> values;
  bool boundary = false;         // nodes on the circle, unimodular targets
  Eigen::MatrixXcd matrix;       // interior systems only
};

// P_{jk} = (1 - conj(w_j) w_k)/(1 - conj(z_j) z_k) for interior nodes.
// Throws DuplicateNodes when two nodes are closer than 1e-10.
Eigen::MatrixXcd pick_matrix(const std::vector<cplx>& nodes,
                             const std::vector<cplx>& values);

struct Solvability {
  bool solvable = false;
  double min_eigenvalue = 0.0;
  double norm = 0.0;    // spectral norm
  double margin = 0.0;  // min_eigenvalue / norm
};

// Nonnegative definiteness up to a relative eigenvalue slack.
Solvability solvability(const Eigen::MatrixXcd& pick, double tolerance);

struct Uniqueness {
  bool unique = false;
  int rank = 0;           // numerical rank at the relative cutoff
  double smallest_ratio = 0.0;  // sigma_min / sigma_max
};

// Unique solution iff the matrix is singular, tested as numerical rank < n.
Uniqueness uniqueness(const Eigen::MatrixXcd& pick,
                      double tolerance = tol::rank_cutoff);

// Numerical rank via singular values below rel_tol * sigma_max.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = tol::rank_cutoff);
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol = tol::rank_cutoff);

// Recovers the finite Blaschke product of degree rank(P) through interior
// data: solves the real-linear homogeneous system w_j P*(z_j) = P(z_j) for
// the coefficients of P, takes the smallest singular direction, and
// validates that the roots of P stay in the open disk and the data are
// reproduced to 1e-8. Throws NotUnique when the Pick matrix has full rank,
// ValidationFailure when no direction validates.
BlaschkeProduct recover_fbp(const std::vector<cplx>& nodes,
                            const std::vector<cplx>& values, int max_degree);

// Interpolation by a finite Blaschke product of degree <= p-1 through p
// boundary nodes with unimodular targets. Scans kernel directions of the
// real-linear system P(t_j) = w_j t_j^{p-1} conj(P(t_j)); circle roots of a
// candidate cancel against the reflected polynomial, roots outside the
// closed disk disqualify it. Throws InterpolationFailure when no direction
// validates.
BlaschkeProduct boundary_fbp_interpolation(const std::vector<cplx>& nodes,
                                           const std::vector<cplx>& values);

}  // namespace kbembed
