#include "kornlab/checks.hpp"

#include <algorithm>
#include <cmath>

#include "kornlab/errors.hpp"
#include "kornlab/quadrature.hpp"

namespace kornlab {

namespace {

double integrate_1d(const QuadRule1D& q, const std::function<double(double)>& g) {
  double s = 0.0;
  for (int i = 0; i < q.size(); ++i) s += q.weights[static_cast<size_t>(i)] * g(q.points[static_cast<size_t>(i)]);
  return s;
}

// Tensor quadrature over the strip: y-rule on [0, l], x-rule per y-line on
// [phi1(y), phi2(y)]. Accumulates several integrands in one pass.
std::vector<double> integrate_domain(const ThinDomain2D& d, int quad_n,
                                     const std::function<void(double, double, double,
                                                              std::vector<double>&)>& accum,
                                     int n_integrals) {
  std::vector<double> out(static_cast<size_t>(n_integrals), 0.0);
  QuadRule1D qy = composite_gauss(quad_n, 0.0, d.l);
  for (int j = 0; j < qy.size(); ++j) {
    double y = qy.points[static_cast<size_t>(j)];
    double wy = qy.weights[static_cast<size_t>(j)];
    double x0 = eval_profile(d.phi1, y).value;
    double x1 = eval_profile(d.phi2, y).value;
    QuadRule1D qx = composite_gauss(quad_n, x0, x1);
    for (int i = 0; i < qx.size(); ++i)
      accum(qx.points[static_cast<size_t>(i)], y, wy * qx.weights[static_cast<size_t>(i)], out);
  }
  return out;
}

// Max relative change between two passes; each integral is compared against
// its own magnitude with a floor at 1e-12 of the largest one, so integrals
// that are identically zero do not produce spurious drift.
double relative_drift(const std::vector<double>& coarse, const std::vector<double>& fine) {
  double big = 0.0;
  for (double v : fine) big = std::max(big, std::abs(v));
  double drift = 0.0;
  for (size_t i = 0; i < coarse.size(); ++i) {
    double denom = std::max(std::abs(fine[i]), std::max(1e-12 * big, 1e-300));
    drift = std::max(drift, std::abs(coarse[i] - fine[i]) / denom);
  }
  return drift;
}

BoundarySelector complement(const BoundarySelector& s) {
  BoundarySelector c;
  for (Face f : {Face::Lower, Face::Upper, Face::AxialStart, Face::AxialEnd})
    if (!s.contains(f)) c.faces.push_back(f);
  return c;
}

}  // namespace

InequalityReport check_hardy(const AnalyticScalar1D& f, double a, double b, double eps,
                             int quad_n) {
  if (!(b > a) || !(a > 0.0))
    throw BadInterval("check_hardy: requires b > a > 0");
  if (!(eps > 0.0) || eps > 1.0)
    throw BadInterval("check_hardy: requires eps in (0, 1]");
  if (quad_n < 64) throw ConfigError("check_hardy: need at least 64 points per subinterval");

  const double mid = a + eps * (b - a);
  auto pieces = [&](int n) {
    std::vector<double> v(3, 0.0);
    v[0] = integrate_1d(gauss_on_interval(n, mid, b), [&](double t) {
      double f_t = f.value(t);
      return f_t * f_t;
    });
    v[1] = integrate_1d(gauss_on_interval(n, a, mid), [&](double t) {
      double f_t = f.value(t);
      return f_t * f_t;
    });
    v[2] = integrate_1d(gauss_on_interval(n, a, b), [&](double t) {
      double df = f(t).g(0);
      return df * df * (b - t) * (b - t);
    });
    return v;
  };
  std::vector<double> coarse = pieces(quad_n);
  std::vector<double> fine = pieces(2 * quad_n);

  InequalityReport r;
  r.check = "hardy";
  r.quad_n = quad_n;
  r.lhs = fine[0];
  r.rhs = (2.0 / eps) * fine[1] + 4.0 * fine[2];
  r.constants = {{"2/eps", 2.0 / eps}, {"deriv_weight", 4.0}};
  r.params = {{"a", a}, {"b", b}, {"eps", eps}};
  r.quad_drift = relative_drift(coarse, fine);
  r.converged = r.quad_drift < 1e-6;
  r.finish();
  return r;
}

InequalityReport check_weighted_gradient(const AnalyticScalar& f, const ConstCoeffOperator& op,
                                         const ThinDomain2D& d, const BoundarySelector& gamma1,
                                         int quad_n, int delta_resolution) {
  if (op.n() != 2)
    throw ConfigError("check_weighted_gradient: operator must be 2x2 for a planar field");
  EllipticityConstants ell = ellipticity_constants(op);

  BoundarySelector gamma2 = complement(gamma1);
  double scale = std::max(max_abs_on_domain(d, f), 1e-300);
  if (!gamma2.empty() && max_abs_on_faces(d, gamma2, f) > 1e-10 * scale)
    throw CutoffMissing("check_weighted_gradient: field does not vanish on the complement of "
                        "the selected boundary part");

  Gamma1Polyline delta(d, gamma1, delta_resolution);
  auto pieces = [&](int n) {
    return integrate_domain(
        d, n,
        [&](double x, double y, double w, std::vector<double>& acc) {
          Jet2 j = f(x, y);
          double dd = delta.distance({x, y});
          double d2 = dd * dd;
          double lf = apply_operator(op, j);
          acc[0] += w * d2 * j.g.squaredNorm();
          acc[1] += w * j.f * j.f;
          acc[2] += w * d2 * d2 * lf * lf;
        },
        3);
  };
  std::vector<double> coarse = pieces(quad_n);
  std::vector<double> fine = pieces(2 * quad_n);

  const double n_dim = 2.0;
  double c1 = 4.0 * n_dim * ell.Lambda * ell.Lambda / (ell.lambda * ell.lambda) + 1.0;
  double c2 = 1.0 / (ell.lambda * ell.lambda);

  InequalityReport r;
  r.check = "lemma_2_1";
  r.quad_n = quad_n;
  r.lhs = fine[0];
  r.rhs = c1 * fine[1] + c2 * fine[2];
  r.constants = {{"lambda", ell.lambda},
                 {"Lambda", ell.Lambda},
                 {"4nLambda^2/lambda^2+1", c1},
                 {"1/lambda^2", c2}};
  r.params = {{"l", d.l}};
  r.quad_drift = relative_drift(coarse, fine);
  r.converged = r.quad_drift < 1e-6;
  r.finish();
  return r;
}

InequalityReport check_weighted_gradient_La(const AnalyticScalar& f, const OperatorLa& op,
                                            const ThinDomain2D& d,
                                            const BoundarySelector& gamma1, int quad_n,
                                            int delta_resolution) {
  double lambda = lambda_a(op.M);
  double M2 = op.M * op.M;
  double C = (1.0 / lambda) *
             (1.0 + (16.0 * (1.0 + M2) * (1.0 + M2) + 64.0 * M2 + 16.0 + 4.0 * op.M1 * op.M1) /
                        lambda);

  Gamma1Polyline delta(d, gamma1, delta_resolution);
  auto pieces = [&](int n) {
    return integrate_domain(
        d, n,
        [&](double x, double y, double w, std::vector<double>& acc) {
          Jet2 j = f(x, y);
          double dd = delta.distance({x, y});
          double d2 = dd * dd;
          double lf = apply_operator(op, j, y);
          acc[0] += w * d2 * j.g.squaredNorm();
          acc[1] += w * (1.0 + dd) * (1.0 + dd) * j.f * j.f;
          acc[2] += w * d2 * d2 * lf * lf;
          acc[3] += w * j.f * j.f;
        },
        4);
  };
  std::vector<double> coarse = pieces(quad_n);
  std::vector<double> fine = pieces(2 * quad_n);

  // Admissibility: vanishing trace on the complement, or the compatibility
  // boundary integral at ~0 relative to the field scale.
  BoundarySelector gamma2 = complement(gamma1);
  double boundary = check_boundary_integral(f, op, d, std::max(64, quad_n), gamma1,
                                            delta_resolution);
  double scale = fine[3] + fine[0];
  double trace_scale = std::max(max_abs_on_domain(d, f), 1e-300);
  bool vanishes = gamma2.empty() || max_abs_on_faces(d, gamma2, f) <= 1e-10 * trace_scale;
  if (!vanishes && std::abs(boundary) > 1e-8 * std::max(scale, 1e-300))
    throw BoundaryConditionViolated(
        "check_weighted_gradient_La: compatibility boundary integral is not negligible");

  InequalityReport r;
  r.check = "lemma_2_2";
  r.quad_n = quad_n;
  r.lhs = fine[0];
  r.rhs = C * (fine[1] + fine[2]);
  r.constants = {{"lambda", lambda}, {"C", C}, {"M", op.M}, {"M1", op.M1}};
  r.params = {{"l", d.l}, {"boundary_integral", boundary}};
  r.quad_drift = relative_drift({coarse[0], coarse[1], coarse[2]},
                                {fine[0], fine[1], fine[2]});
  r.converged = r.quad_drift < 1e-6;
  r.finish();
  return r;
}

BoundaryIntegralBreakdown boundary_integral_terms(const AnalyticScalar& f, const OperatorLa& op,
                                                  const ThinDomain2D& d, int quad_n,
                                                  const BoundarySelector& gamma1,
                                                  int delta_resolution) {
  Gamma1Polyline delta(d, gamma1, delta_resolution);
  // The integrand carries a delta^2 factor, so faces belonging to Gamma1
  // contribute exactly zero and are skipped rather than sampled.
  auto profile_face = [&](const Profile& phi, double nu_sign) {
    // nu dS = nu_sign * (1, -phi'(y)) dy; nu_sign = -1 on the lower face.
    return integrate_1d(composite_gauss(quad_n, 0.0, d.l), [&](double y) {
      ProfileEval pe = eval_profile(phi, y);
      Jet2 j = f(pe.value, y);
      double a = eval_profile(op.a, y).value;
      double dd = delta.distance({pe.value, y});
      double n1 = nu_sign;
      double n2 = -nu_sign * pe.d1;
      return j.f * dd * dd *
             (j.g(0) * n1 * (1.0 + a * a) - 2.0 * a * j.g(0) * n2 + j.g(1) * n2);
    });
  };
  auto axial_face = [&](double y, double nu2) {
    double x0 = eval_profile(d.phi1, y).value;
    double x1 = eval_profile(d.phi2, y).value;
    double a = eval_profile(op.a, y).value;
    return integrate_1d(composite_gauss(quad_n, x0, x1), [&](double x) {
      Jet2 j = f(x, y);
      double dd = delta.distance({x, y});
      return j.f * dd * dd * (-2.0 * a * j.g(0) * nu2 + j.g(1) * nu2);
    });
  };

  BoundaryIntegralBreakdown out;
  if (!gamma1.contains(Face::Lower)) out.lower = profile_face(d.phi1, -1.0);
  if (!gamma1.contains(Face::Upper)) out.upper = profile_face(d.phi2, 1.0);
  if (!gamma1.contains(Face::AxialStart)) out.axial_start = axial_face(0.0, -1.0);
  if (!gamma1.contains(Face::AxialEnd)) out.axial_end = axial_face(d.l, 1.0);
  out.total = out.lower + out.upper + out.axial_start + out.axial_end;
  return out;
}

double check_boundary_integral(const AnalyticScalar& f, const OperatorLa& op,
                               const ThinDomain2D& d, int quad_n,
                               const BoundarySelector& gamma1, int delta_resolution) {
  return boundary_integral_terms(f, op, d, quad_n, gamma1, delta_resolution).total;
}

}  // namespace kornlab
