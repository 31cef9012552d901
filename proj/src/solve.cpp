#include "kornlab/solve.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>

#include "kornlab/errors.hpp"

namespace kornlab {

EllipticSolveResult solve_elliptic(const Mesh2D& mesh, const OperatorVariant& op,
                                   const std::function<double(double, double)>& g,
                                   int quad_order) {
  FormDescriptor desc;
  desc.kind = FormKind::OperatorEnergy;
  desc.op = op;
  SymmetricForm form = assemble(mesh, desc, quad_order);

  ConstraintSet bc;
  bc.dirichlet.push_back(
      {BoundarySelector{Face::Lower, Face::Upper, Face::AxialStart, Face::AxialEnd},
       ComponentMask::U});
  ConstrainedSystem cs = constrain(mesh, 1, bc);

  Eigen::VectorXd ub = Eigen::VectorXd::Zero(cs.full_size);
  for (Face f : {Face::Lower, Face::Upper, Face::AxialStart, Face::AxialEnd})
    for (int node : mesh.face_nodes(f))
      ub(node) = g(mesh.nodes(node, 0), mesh.nodes(node, 1));

  Eigen::SparseMatrix<double> Ar = cs.reduce(form.A);
  Eigen::VectorXd rhs = -(cs.P.transpose() * (form.A * ub));

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(Ar);
  if (ldlt.info() != Eigen::Success)
    throw SingularSystem("solve_elliptic: interior stiffness factorization failed");
  Eigen::VectorXd ur = ldlt.solve(rhs);

  // One refinement pass keeps the interior residual at roundoff even on
  // badly scaled meshes; the factorization is reused.
  Eigen::VectorXd r = rhs - Ar * ur;
  ur += ldlt.solve(r);
  r = rhs - Ar * ur;

  EllipticSolveResult out;
  out.u = cs.expand(ur) + ub;
  double scale = rhs.norm();
  out.residual = scale > 0.0 ? r.norm() / scale : r.norm();
  return out;
}

KornSetup korn_setup(const Mesh2D& mesh, AxialBC bc, int quad_order) {
  ConstraintSet set;
  if (bc == AxialBC::DirichletEnds) {
    set.dirichlet.push_back(
        {BoundarySelector{Face::AxialStart, Face::AxialEnd}, ComponentMask::U});
    set.deflate.push_back({ComponentMask::V});
  } else {
    set.periodic.push_back({ComponentMask::U});
    set.deflate.push_back({ComponentMask::Both});
  }
  KornSetup ks;
  ks.cs = constrain(mesh, 2, set);
  ks.strain = ks.cs.reduce(assemble(mesh, FormKind::Strain, quad_order).A);
  ks.grad = ks.cs.reduce(assemble(mesh, FormKind::GradVector, quad_order).A);
  ks.mass_u = ks.cs.reduce(assemble(mesh, FormKind::MassUComponent, quad_order).A);
  if (bc == AxialBC::Periodic && !ks.cs.deflation.empty()) {
    // The u-translation is only a gauge direction for pencils that annihilate
    // it. Against a mass-weighted denominator the optimal slice is the
    // mass-mean-free one, and deflating the translation's mass image instead
    // of the translation itself keeps the constrained eigenproblem's Lagrange
    // multiplier at zero. With the plain vector the full-space residual
    // bottoms out at the multiplier size on nonuniform meshes (~1e-8) and the
    // tolerance is unreachable.
    Eigen::VectorXd w = ks.mass_u * ks.cs.deflation[0];
    double nw = w.norm();
    if (nw > 0.0) ks.cs.deflation[0] = w / nw;
  }
  return ks;
}

KornFirstResult korn_first_constant(const Mesh2D& mesh, AxialBC bc, double tol,
                                    bool dense_oracle, int quad_order) {
  KornSetup ks = korn_setup(mesh, bc, quad_order);
  Pencil p{ks.strain, ks.grad, ks.cs.deflation};
  EigResult eig = dense_oracle ? smallest_generalized_eig_dense(p)
                               : smallest_generalized_eig(p, tol);

  KornFirstResult out;
  out.mu = eig.value;
  if (!(out.mu > 0.0)) throw SingularSystem("korn_first_constant: nonpositive eigenvalue");
  out.K = 1.0 / out.mu;
  out.residual = eig.residual;
  out.iterations = eig.iterations;
  out.grad_energy = eig.vector.dot(ks.grad * eig.vector);
  out.strain_energy = eig.vector.dot(ks.strain * eig.vector);
  double u2 = eig.vector.dot(ks.mass_u * eig.vector);
  out.friedrichs = u2 / out.grad_energy;
  out.field = ks.cs.expand(eig.vector);
  return out;
}

namespace {

// Largest generalized eigenvalue of (grad, N_t): computed as the reciprocal of
// the smallest eigenvalue of the transposed pencil (N_t, grad).
//
// Scan probes use the bounded solver: in the flat tails of the t-scan the
// pencil's low end is the accumulation edge of the strain/gradient band
// (fields with the mass-weighted component switched off), which no iteration
// resolves to full tolerance. A Ritz value from above still gives a certified
// lower bound for the probe, which is all the maximization needs. The winning
// t is re-solved with the throwing variant, and near the maximum the smallest
// eigenvalue sits well below the band, so that solve converges.
struct RatioProblem {
  const KornSetup& ks;
  double h;
  double eig_tol;

  Pencil pencil_at(double t) const {
    double cu = 0.5 * t / h;
    double ce = 1.0 + 0.5 / (h * t);
    Eigen::SparseMatrix<double> Nt = cu * ks.mass_u + ce * ks.strain;
    return Pencil{std::move(Nt), ks.grad, ks.cs.deflation};
  }

  EigResult eig_at(double t) const { return smallest_generalized_eig(pencil_at(t), eig_tol); }

  double scan_value(double t) const {
    return smallest_generalized_eig_bounded(pencil_at(t), eig_tol, 120).value;
  }
};

}  // namespace

StrongRatioResult strong_ratio_sup(const Mesh2D& mesh, AxialBC bc, double h,
                                   int coarse_points, double eig_tol, int quad_order) {
  if (!(h > 0.0)) throw NonPositiveInput("strong_ratio_sup: h must be positive");
  if (coarse_points < 3) throw ConfigError("strong_ratio_sup: need at least 3 scan points");
  KornSetup ks = korn_setup(mesh, bc, quad_order);
  RatioProblem prob{ks, h, eig_tol};

  StrongRatioResult out;
  auto ratio_at = [&](double tau) {
    double t = std::pow(10.0, tau);
    double R = 1.0 / prob.scan_value(t);
    out.trace.emplace_back(t, R);
    return R;
  };

  const double tau_lo = -8.0, tau_hi = 8.0;
  int best = 0;
  double best_R = -1.0;
  std::vector<double> taus(static_cast<size_t>(coarse_points));
  for (int i = 0; i < coarse_points; ++i) {
    double tau = tau_lo + (tau_hi - tau_lo) * i / (coarse_points - 1);
    taus[static_cast<size_t>(i)] = tau;
    double R = ratio_at(tau);
    if (R > best_R) {
      best_R = R;
      best = i;
    }
  }

  // Golden-section refinement of the bracket around the best coarse sample.
  // R(t) is a max of concave-in-tau sheets; the scan is fine enough that the
  // bracket is unimodal in practice, and the probe check below validates the
  // result independently.
  double a = taus[static_cast<size_t>(std::max(0, best - 1))];
  double b = taus[static_cast<size_t>(std::min(coarse_points - 1, best + 1))];
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = ratio_at(x1), f2 = ratio_at(x2);
  while (b - a > 1e-4) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = ratio_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = ratio_at(x1);
    }
  }

  double tau_star = f1 > f2 ? x1 : x2;
  double t_star = std::pow(10.0, tau_star);
  EigResult eig = prob.eig_at(t_star);
  out.Rstar = 1.0 / eig.value;
  out.t_star = t_star;
  out.field = ks.cs.expand(eig.vector);
  out.grad_energy = eig.vector.dot(ks.grad * eig.vector);
  out.u_l2 = std::sqrt(eig.vector.dot(ks.mass_u * eig.vector));
  out.strain_energy = eig.vector.dot(ks.strain * eig.vector);
  out.probe_ratio =
      out.grad_energy / (out.u_l2 * std::sqrt(out.strain_energy) / h + out.strain_energy);
  std::sort(out.trace.begin(), out.trace.end());
  return out;
}

}  // namespace kornlab
