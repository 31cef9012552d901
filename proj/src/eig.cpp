#include "kornlab/eig.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseLU>
#include <cmath>
#include <cstdio>
#include <limits>

#include "kornlab/errors.hpp"
#include "kornlab/rng.hpp"

namespace kornlab {

namespace {

double col_abs_sum_max(const Eigen::SparseMatrix<double>& A) {
  double best = 0.0;
  for (int k = 0; k < A.outerSize(); ++k) {
    double s = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
      s += std::abs(it.value());
    best = std::max(best, s);
  }
  return best;
}

// Backward error of the pair: the vector-norm variant |Nx| + mu |Dx| sits far
// below the matrix scale for smooth modes of stiff pencils and pushes the
// attainable residual above any honest tolerance on thin meshes.
double pair_residual(const Pencil& p, double norm_n, double norm_d, double mu,
                     const Eigen::VectorXd& x) {
  double denom = (norm_n + std::abs(mu) * norm_d) * x.norm();
  if (denom == 0.0) return 0.0;
  return (p.N * x - mu * (p.D * x)).norm() / denom;
}

EigResult block_inverse_iteration(const Pencil& p, double tol, int max_iter, bool throw_on_miss) {
  const int n = static_cast<int>(p.N.rows());
  const int m = static_cast<int>(p.deflation.size());
  if (n == 0) throw SingularSystem("smallest_generalized_eig: empty pencil");

  // KKT system [[N, K], [K', 0]]; the multiplier block keeps every solve
  // inside the subspace orthogonal to the deflation vectors.
  Eigen::SparseMatrix<double> kkt(n + m, n + m);
  {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(p.N.nonZeros()) + 2 * static_cast<size_t>(m) * n);
    for (int k = 0; k < p.N.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(p.N, k); it; ++it)
        trips.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i)
        if (p.deflation[static_cast<size_t>(j)](i) != 0.0) {
          trips.emplace_back(i, n + j, p.deflation[static_cast<size_t>(j)](i));
          trips.emplace_back(n + j, i, p.deflation[static_cast<size_t>(j)](i));
        }
    kkt.setFromTriplets(trips.begin(), trips.end());
  }
  // SparseLU never returns on a matrix with zero stored entries in release
  // builds, so an empty KKT has to be rejected before the factorization.
  if (kkt.nonZeros() == 0)
    throw SingularSystem("smallest_generalized_eig: KKT matrix is empty");
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(kkt);
  if (lu.info() != Eigen::Success)
    throw SingularSystem("smallest_generalized_eig: KKT factorization failed");

  auto solve_constrained = [&](const Eigen::VectorXd& rhs) {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n + m);
    full.head(n) = rhs;
    Eigen::VectorXd sol = lu.solve(full);
    // One refinement pass: the KKT factor alone leaves ~1e-8 of garbage in the
    // iterates on badly scaled pencils, which caps the attainable residual.
    sol += lu.solve(Eigen::VectorXd(full - kkt * sol));
    return Eigen::VectorXd(sol.head(n));
  };

  const int block = std::min(6, n);
  Rng rng(0x5EEDull ^ static_cast<std::uint64_t>(n));
  Eigen::MatrixXd X(n, block);
  for (int j = 0; j < block; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = rng.uniform(-1.0, 1.0);

  const double norm_n = col_abs_sum_max(p.N);
  const double norm_d = col_abs_sum_max(p.D);
  EigResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iter; ++it) {
    Eigen::MatrixXd Y(n, block);
    for (int j = 0; j < block; ++j) Y.col(j) = solve_constrained(p.D * X.col(j));
    // Orthonormalize before the Rayleigh-Ritz projection; the block collapses
    // toward the dominant invariant subspace of N^{-1} D otherwise.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Y);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, block);

    Eigen::MatrixXd Np = Q.transpose() * (p.N * Q).eval();
    Eigen::MatrixXd Dp = Q.transpose() * (p.D * Q).eval();
    Np = 0.5 * (Np + Np.transpose());
    Dp = 0.5 * (Dp + Dp.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Np, Dp);
    if (ges.info() != Eigen::Success)
      throw SingularSystem("smallest_generalized_eig: Rayleigh-Ritz projection failed");

    X = Q * ges.eigenvectors();
    double mu = ges.eigenvalues()(0);
    Eigen::VectorXd x = X.col(0);
    double res = pair_residual(p, norm_n, norm_d, mu, x);
    if (res < best.residual) {
      best.value = mu;
      best.vector = x;
      best.residual = res;
      best.iterations = it;
    }
    if (res <= tol) break;
  }
  if (best.residual > tol) {
    if (throw_on_miss) {
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "smallest_generalized_eig: residual %.3g above %.3g after %d iterations",
                    best.residual, tol, max_iter);
      throw NoConvergence(msg);
    }
    best.converged = false;
  }
  double dnorm = best.vector.dot(p.D * best.vector);
  if (dnorm > 0.0) best.vector /= std::sqrt(dnorm);
  return best;
}

}  // namespace

EigResult smallest_generalized_eig(const Pencil& p, double tol, int max_iter) {
  return block_inverse_iteration(p, tol, max_iter, true);
}

EigResult smallest_generalized_eig_bounded(const Pencil& p, double tol, int max_iter) {
  return block_inverse_iteration(p, tol, max_iter, false);
}

EigResult smallest_generalized_eig_dense(const Pencil& p) {
  const int n = static_cast<int>(p.N.rows());
  const int m = static_cast<int>(p.deflation.size());
  Eigen::MatrixXd N = Eigen::MatrixXd(p.N);
  Eigen::MatrixXd D = Eigen::MatrixXd(p.D);

  Eigen::MatrixXd W;
  if (m == 0) {
    W = Eigen::MatrixXd::Identity(n, n);
  } else {
    Eigen::MatrixXd K(n, m);
    for (int j = 0; j < m; ++j) K.col(j) = p.deflation[static_cast<size_t>(j)];
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(K);
    Eigen::MatrixXd Q = qr.householderQ();
    W = Q.rightCols(n - m);
  }
  Eigen::MatrixXd Np = W.transpose() * N * W;
  Eigen::MatrixXd Dp = W.transpose() * D * W;
  Np = 0.5 * (Np + Np.transpose());
  Dp = 0.5 * (Dp + Dp.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Np, Dp);
  if (ges.info() != Eigen::Success)
    throw SingularSystem("smallest_generalized_eig_dense: eigensolver failed");
  EigResult out;
  out.value = ges.eigenvalues()(0);
  Eigen::VectorXd x = W * ges.eigenvectors().col(0);
  double dnorm = x.dot(p.D * x);
  if (dnorm > 0.0) x /= std::sqrt(dnorm);
  out.vector = x;
  out.residual = pair_residual(p, col_abs_sum_max(p.N), col_abs_sum_max(p.D), out.value, x);
  out.iterations = 1;
  return out;
}

}  // namespace kornlab
