#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kornlab/checks.hpp"
#include "kornlab/solve.hpp"

namespace kornlab {

struct PowerFit {
  double exponent = 0.0;
  double log_constant = 0.0;  // natural log of the prefactor
  double r2 = 1.0;
};

// Least squares of log(value) against log(h). Needs >= 3 points (ConfigError)
// with every coordinate positive (NonPositiveInput).
PowerFit fit_scaling(const std::vector<std::pair<double, double>>& points);

struct SweepRow {
  double h = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

// One thickness sweep: per-h inequality sides, the fitted power law of the
// ratio, and a verdict against an exponent window.
struct SweepReport {
  std::string check;
  std::vector<SweepRow> rows;
  PowerFit fit;
  double window_lo = 0.0;
  double window_hi = 0.0;
  bool holds = false;
  std::uint64_t seed = 0;
  std::vector<NamedValue> params;
  std::vector<NamedValue> notes;  // per-point extras: t*, residuals, oracle gaps

  // Fits ratio(h) and sets the verdict from the window.
  void finish();
};

// Thin-strip families parametrized by the thickness parameter h.
//   Rectangle:      phi1 = 0,                    phi2 = h
//   CosineCap:      phi1 = 0,                    phi2 = h (1 + 0.2 cos(2 pi y / l))
//   CurvedParallel: phi1 = (0.3 l / 2pi) cos(2 pi y / l), phi2 = phi1 + h
// All are periodic-compatible on [0, l].
enum class DomainFamily { Rectangle, CosineCap, CurvedParallel };

ThinDomain2D make_family_domain(DomainFamily fam, double h, double l = 1.0);
std::string to_string(DomainFamily fam);

struct SweepOptions {
  int nx = 8;
  int ny = 64;
  double l = 1.0;
  std::vector<double> h_sweep = {0.2, 0.1, 0.05, 0.025};
  std::uint64_t seed = 1234;
  int quad_order = 3;
  double eig_tol = 1e-9;
  int coarse_points = 33;  // t-scan resolution for the mixed-ratio sweeps
};

// Scalar elliptic boundary-value sweep: solves L(u) = 0 with random trace
// data vanishing on the axial faces, reports
//   R(h) = |grad u|^2 / ((1/h) |u| |u_x| + |u_x|^2)
// and fits its power law (window [-0.4, 0.4]).
//   Cylinder    rectangle strip, operator as given
//   CurvedCap   cosine-cap strip, operator as given
//   Hyperplane  sheared strip (affine profiles, slope `shear`); the operator
//               must be diagonal, the solve runs in the sheared frame and the
//               ratio is evaluated in the flattened frame via the chain rule.
enum class KornLikeScenario { Cylinder, CurvedCap, Hyperplane };

SweepReport verify_korn_like(KornLikeScenario scen, const ConstCoeffOperator& op,
                             const SweepOptions& opt, double shear = 0.5);

// Mixed-ratio sweep R*(h) from strong_ratio_sup; window [-0.4, 0.4].
SweepReport verify_strong_second_korn(DomainFamily fam, AxialBC bc, const SweepOptions& opt);

// Gradient-vs-strain constant sweep K(h); window [-2.3, -1.7], plus the
// pointwise cap K(h) <= 1.1 * C_fit / h^2 with C_fit the exponent=-2 fit.
// With dense_oracle_at_coarsest, the largest-h point is recomputed by the
// dense eigensolver and the relative gap recorded in notes ("oracle_gap").
SweepReport verify_first_korn_scaling(DomainFamily fam, AxialBC bc, const SweepOptions& opt,
                                      bool dense_oracle_at_coarsest = false);

// Runs the hyperplane scenario and its flattened twin (same data, transformed
// operator on the straight strip) and records the worst relative disagreement
// of the two ratio curves.
struct ShearConsistency {
  SweepReport sheared;
  SweepReport flattened;
  double max_rel_gap = 0.0;
};

ShearConsistency verify_shear_consistency(const ConstCoeffOperator& diag_op, double shear,
                                          const SweepOptions& opt);

// Dirichlet solve of the Laplacian with exact data x^2 - y^2 on the unit
// square at several resolutions; rows are (1/n, error, 1, error) and the fit
// exponent is the convergence order (expected 2).
SweepReport manufactured_convergence(const std::vector<int>& ns = {8, 16, 32});

// The boundary data the sweeps solve against: vanishes on the axial faces,
// trig content along the axis, affine dependence on the normalized thickness
// coordinate. Exposed so single solves can reproduce sweep scenarios.
AnalyticScalar sweep_trace_data(std::uint64_t seed, const ThinDomain2D& d);

}  // namespace kornlab
