#pragma once

#include <Eigen/Sparse>
#include <vector>

namespace kornlab {

// Generalized symmetric pencil N x = mu D x on the subspace orthogonal to the
// deflation vectors (reduced coordinates). Both matrices must be symmetric
// positive semidefinite with N positive definite on the constrained subspace;
// deflation vectors are expected to span the shared kernel.
struct Pencil {
  Eigen::SparseMatrix<double> N;
  Eigen::SparseMatrix<double> D;
  std::vector<Eigen::VectorXd> deflation;
};

struct EigResult {
  double value = 0.0;
  Eigen::VectorXd vector;  // scaled so x' D x = 1
  double residual = 0.0;   // backward error |N x - mu D x| / ((|N|_1 + mu |D|_1) |x|)
  int iterations = 0;
  bool converged = true;
};

// Shift-invert (shift 0) block subspace iteration. Deflation constraints are
// enforced through a sparse KKT factorization of [[N, K], [K', 0]], so
// iterates stay orthogonal to the deflation vectors without densifying N.
// Throws NoConvergence past max_iter, SingularSystem if the factorization fails.
EigResult smallest_generalized_eig(const Pencil& p, double tol = 1e-10, int max_iter = 500);

// Same iteration, but a miss returns the best Rayleigh-Ritz pair with
// converged = false instead of throwing. The Ritz value never undershoots the
// true smallest eigenvalue, so 1/value is a safe lower bound when scanning
// for a maximum of reciprocals.
EigResult smallest_generalized_eig_bounded(const Pencil& p, double tol = 1e-10,
                                           int max_iter = 500);

// Dense brute-force oracle: projects out the deflation span with a Householder
// complement basis and solves the full dense generalized eigenproblem.
EigResult smallest_generalized_eig_dense(const Pencil& p);

}  // namespace kornlab
