#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "kornlab/constraints.hpp"
#include "kornlab/eig.hpp"
#include "kornlab/forms.hpp"

namespace kornlab {

struct EllipticSolveResult {
  Eigen::VectorXd u;        // nodal values, boundary data included
  double residual = 0.0;    // interior residual relative to the boundary load
};

// Galerkin solve of L(u) = 0 with Dirichlet data g on the whole boundary.
// The operator energy form is the exact weak form (divergence form for L_a).
EllipticSolveResult solve_elliptic(const Mesh2D& mesh, const OperatorVariant& op,
                                   const std::function<double(double, double)>& g,
                                   int quad_order = 3);

enum class AxialBC { DirichletEnds, Periodic };

// Forms and constraints shared by the Korn eigenproblems: strain, grad and
// first-component mass, reduced by the axial boundary condition.
// DirichletEnds pins u on both axial faces and deflates constant v;
// Periodic identifies u across the axial faces and deflates both constants.
struct KornSetup {
  ConstrainedSystem cs;
  Eigen::SparseMatrix<double> strain;
  Eigen::SparseMatrix<double> grad;
  Eigen::SparseMatrix<double> mass_u;
};

KornSetup korn_setup(const Mesh2D& mesh, AxialBC bc, int quad_order = 3);

struct KornFirstResult {
  double K = 0.0;           // 1 / mu_min of the (strain, grad) pencil
  double mu = 0.0;
  double residual = 0.0;
  int iterations = 0;
  double friedrichs = 0.0;  // |u|^2 / |grad U|^2 at the extremal field
  double grad_energy = 0.0;
  double strain_energy = 0.0;
  Eigen::VectorXd field;    // full nodal coefficients
};

KornFirstResult korn_first_constant(const Mesh2D& mesh, AxialBC bc, double tol = 1e-10,
                                    bool dense_oracle = false, int quad_order = 3);

struct StrongRatioResult {
  double Rstar = 0.0;
  double t_star = 0.0;
  double probe_ratio = 0.0;  // ratio evaluated directly on the extremal field
  double grad_energy = 0.0;
  double u_l2 = 0.0;
  double strain_energy = 0.0;
  Eigen::VectorXd field;
  std::vector<std::pair<double, double>> trace;  // (t, R(t)), ascending in t
};

// sup over fields of |grad U|^2 / ((1/h) |u| |e(U)| + |e(U)|^2), computed as
// max over t > 0 of the largest eigenvalue of the pencil
// (grad, (t/2h) mass_u + (1/(2ht) + 1) strain): the product |u||e| is the
// lower envelope of the parabolas (t|u|^2 + |e|^2/t)/2. Coarse scan over
// log10 t in [-8, 8], golden-section refinement around the best cell.
StrongRatioResult strong_ratio_sup(const Mesh2D& mesh, AxialBC bc, double h,
                                   int coarse_points = 33, double eig_tol = 1e-9,
                                   int quad_order = 3);

}  // namespace kornlab
