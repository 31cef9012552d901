#include "kornlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "kornlab/errors.hpp"
#include "kornlab/parallel.hpp"
#include "kornlab/quadrature.hpp"
#include "kornlab/rng.hpp"

namespace kornlab {

namespace {

// parallel_for_index would terminate on a throwing worker; capture per-case
// exceptions and rethrow the lowest-index one so failures are deterministic.
template <typename Body>
void run_cases(int n, const Body& body) {
  std::vector<std::exception_ptr> errs(static_cast<size_t>(n));
  parallel_for_index(n, [&](int i) {
    try {
      body(i);
    } catch (...) {
      errs[static_cast<size_t>(i)] = std::current_exception();
    }
  });
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

void append(std::vector<NamedValue>& dst, std::initializer_list<NamedValue> more) {
  dst.insert(dst.end(), more);
}

BoundarySelector draw_selector(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return {Face::Lower, Face::Upper};
    case 1: return {Face::AxialStart, Face::AxialEnd};
    case 2: return {Face::Lower};
    default: return {Face::Upper};
  }
}

BoundarySelector complement_of(const BoundarySelector& s) {
  BoundarySelector out;
  for (Face f : {Face::Lower, Face::Upper, Face::AxialStart, Face::AxialEnd})
    if (!s.contains(f)) out.faces.push_back(f);
  return out;
}

}  // namespace

std::vector<InequalityReport> hardy_suite(const SuiteOptions& opt) {
  if (opt.cases < 1) throw ConfigError("hardy_suite: need at least one case");
  if (opt.eps >= 0.0 && (opt.eps <= 0.0 || opt.eps > 1.0))
    throw BadInterval("hardy_suite: eps must lie in (0, 1]");
  const int quad_n = opt.quad_n > 0 ? opt.quad_n : 64;

  std::vector<InequalityReport> out(static_cast<size_t>(opt.cases));
  run_cases(opt.cases, [&](int i) {
    const std::uint64_t s = sweep_seed(opt.seed, static_cast<std::uint64_t>(i));
    Rng rng(s);
    const double a = rng.uniform(0.5, 2.5);
    const double b = rng.uniform(a + 0.2, 3.0);
    const double eps = opt.eps > 0.0 ? opt.eps : rng.uniform(0.05, 1.0);
    AnalyticScalar1D f = random_trig_poly_1d(rng, a, b);
    InequalityReport r = check_hardy(f, a, b, eps, quad_n);
    r.seed = s;
    out[static_cast<size_t>(i)] = std::move(r);
  });
  return out;
}

std::vector<InequalityReport> lemma21_suite(const SuiteOptions& opt) {
  if (opt.cases < 1) throw ConfigError("lemma21_suite: need at least one case");
  const int quad_n = opt.quad_n > 0 ? opt.quad_n : 24;

  std::vector<InequalityReport> out(static_cast<size_t>(opt.cases));
  run_cases(opt.cases, [&](int i) {
    const std::uint64_t s = sweep_seed(opt.seed, static_cast<std::uint64_t>(i));
    Rng rng(s);

    ThinDomain2D d;
    d.l = rng.uniform(0.5, 2.0);
    const double thickness = rng.uniform(0.2, 1.5);
    const double offset = rng.uniform(-0.5, 0.5);
    d.phi1 = ConstantProfile{offset};
    d.phi2 = ConstantProfile{offset + thickness};

    // Kink-aligned selectors only; the composite panels put the medial line
    // of opposite-face pairs exactly on a panel boundary.
    const BoundarySelector gamma1 = draw_selector(rng);

    const double d1 = rng.uniform(0.5, 2.0);
    const double d2 = rng.uniform(0.5, 2.0);
    const double cmax = 0.4 * std::min(d1, d2);
    const double c = rng.uniform(-cmax, cmax);
    const double skew = rng.uniform(-0.2, 0.2) * std::min(d1, d2);
    ConstCoeffOperator op;
    op.a = Eigen::MatrixXd(2, 2);
    op.a << d1, c + skew, c - skew, d2;

    AnalyticScalar f = cutoff_for(d, complement_of(gamma1)) * random_trig_poly(rng, 3, 3.0);

    InequalityReport r = check_weighted_gradient(f, op, d, gamma1, quad_n);
    r.seed = s;
    append(r.params, {{"thickness", thickness},
                      {"offset", offset},
                      {"gamma1_lower", gamma1.contains(Face::Lower) ? 1.0 : 0.0},
                      {"gamma1_upper", gamma1.contains(Face::Upper) ? 1.0 : 0.0},
                      {"gamma1_start", gamma1.contains(Face::AxialStart) ? 1.0 : 0.0},
                      {"gamma1_end", gamma1.contains(Face::AxialEnd) ? 1.0 : 0.0},
                      {"a11", op.a(0, 0)},
                      {"a12", op.a(0, 1)},
                      {"a21", op.a(1, 0)},
                      {"a22", op.a(1, 1)}});
    out[static_cast<size_t>(i)] = std::move(r);
  });
  return out;
}

std::vector<InequalityReport> lemma22_suite(const SuiteOptions& opt) {
  if (opt.cases < 1) throw ConfigError("lemma22_suite: need at least one case");
  const int quad_n = opt.quad_n > 0 ? opt.quad_n : 24;

  std::vector<InequalityReport> out(static_cast<size_t>(opt.cases));
  run_cases(opt.cases, [&](int i) {
    const std::uint64_t s = sweep_seed(opt.seed, static_cast<std::uint64_t>(i));
    Rng rng(s);

    ThinDomain2D d;
    d.l = rng.uniform(0.8, 1.6);
    const double thickness = rng.uniform(0.1, 0.8);
    const double offset = rng.uniform(-0.3, 0.3);
    d.phi1 = ConstantProfile{offset};
    d.phi2 = ConstantProfile{offset + thickness};

    CosineProfile a;
    a.c0 = rng.uniform(-0.5, 0.5);
    a.amp = rng.uniform(0.0, 0.5);
    a.freq = rng.uniform(0.5, 3.0);
    a.phase = rng.uniform(0.0, 6.283185307179586);
    OperatorLa op = make_operator_la(a, d.l);

    // Vanishing on the axial faces makes the compatibility integrand zero on
    // the whole boundary (delta kills the rest).
    AnalyticScalar f = cutoff_for(d, BoundarySelector{Face::AxialStart, Face::AxialEnd}) *
                       random_trig_poly(rng, 3, 3.0);

    InequalityReport r = check_weighted_gradient_La(
        f, op, d, BoundarySelector{Face::Lower, Face::Upper}, quad_n);
    r.seed = s;
    append(r.params, {{"thickness", thickness},
                      {"offset", offset},
                      {"a_c0", a.c0},
                      {"a_amp", a.amp},
                      {"a_freq", a.freq},
                      {"a_phase", a.phase}});
    out[static_cast<size_t>(i)] = std::move(r);
  });
  return out;
}

namespace {

// Plain composite-Gauss value of sum integrands over the domain; used only to
// set the scale the cancellation is measured against.
void domain_scale_integrals(const ThinDomain2D& d, const BoundarySelector& gamma1,
                            const AnalyticScalar& f, double* f_sq, double* grad_sq) {
  Gamma1Polyline poly(d, gamma1);
  QuadRule1D ry = composite_gauss(48, 0.0, d.l);
  *f_sq = 0.0;
  *grad_sq = 0.0;
  for (size_t iy = 0; iy < ry.points.size(); ++iy) {
    const double y = ry.points[iy];
    const double x0 = eval_profile(d.phi1, y).value;
    const double x1 = eval_profile(d.phi2, y).value;
    QuadRule1D rx = composite_gauss(48, x0, x1);
    for (size_t ix = 0; ix < rx.points.size(); ++ix) {
      const double w = ry.weights[iy] * rx.weights[ix];
      Jet2 j = f(rx.points[ix], y);
      const double delta = poly.distance({rx.points[ix], y});
      *f_sq += w * j.f * j.f;
      *grad_sq += w * delta * delta * (j.g[0] * j.g[0] + j.g[1] * j.g[1]);
    }
  }
}

}  // namespace

std::vector<InequalityReport> periodic_boundary_suite(const SuiteOptions& opt) {
  if (opt.cases < 1) throw ConfigError("periodic_boundary_suite: need at least one case");
  const int quad_n = opt.quad_n > 0 ? opt.quad_n : 64;
  const double two_pi = 6.283185307179586;

  std::vector<InequalityReport> out(static_cast<size_t>(opt.cases));
  run_cases(opt.cases, [&](int i) {
    const std::uint64_t s = sweep_seed(opt.seed, static_cast<std::uint64_t>(i));
    Rng rng(s);

    ThinDomain2D d;
    d.l = rng.uniform(0.8, 1.5);
    const double thickness = rng.uniform(0.3, 0.8);
    const double offset = rng.uniform(-0.3, 0.3);
    // Integer-frequency zero-phase profiles are symmetric about y = l/2, so
    // the distance field agrees pointwise on the two axial faces.
    const double amp1 = rng.uniform(-0.1, 0.1) * thickness;
    const double amp2 = rng.uniform(-0.1, 0.1) * thickness;
    const double k1 = 1.0 + static_cast<double>(rng.below(2));
    const double k2 = 1.0 + static_cast<double>(rng.below(2));
    d.phi1 = CosineProfile{offset, amp1, two_pi * k1 / d.l, 0.0};
    d.phi2 = CosineProfile{offset + thickness, amp2, two_pi * k2 / d.l, 0.0};

    CosineProfile a;
    a.c0 = rng.uniform(-0.5, 0.5);
    a.amp = rng.uniform(0.0, 0.4);
    a.freq = two_pi * (1.0 + static_cast<double>(rng.below(2))) / d.l;
    a.phase = 0.0;
    OperatorLa op = make_operator_la(a, d.l);

    // l-periodic data: trig modes in y with affine-in-x amplitudes.
    AnalyticScalar f = AnalyticScalar::constant(0.0);
    for (int k = 1; k <= 2; ++k) {
      const double w = two_pi * static_cast<double>(k) / d.l;
      AnalyticScalar amp_c =
          AnalyticScalar::constant(rng.uniform(-1.0, 1.0)) +
          rng.uniform(-1.0, 1.0) * AnalyticScalar::coord_x();
      AnalyticScalar amp_s =
          AnalyticScalar::constant(rng.uniform(-1.0, 1.0)) +
          rng.uniform(-1.0, 1.0) * AnalyticScalar::coord_x();
      f = f + amp_c * cos_wave(0.0, w, 0.0) + amp_s * sin_wave(0.0, w, 0.0);
    }

    const BoundarySelector gamma1{Face::Lower, Face::Upper};
    BoundaryIntegralBreakdown b = boundary_integral_terms(f, op, d, quad_n, gamma1);
    double f_sq = 0.0, grad_sq = 0.0;
    domain_scale_integrals(d, gamma1, f, &f_sq, &grad_sq);

    InequalityReport r;
    r.check = "condition_8_periodic";
    r.lhs = std::abs(b.total);
    r.rhs = 1e-8 * (f_sq + grad_sq);
    r.quad_n = quad_n;
    r.seed = s;
    r.constants = {{"axial_start", b.axial_start},
                   {"axial_end", b.axial_end},
                   {"scale", f_sq + grad_sq}};
    r.params = {{"l", d.l},
                {"thickness", thickness},
                {"offset", offset},
                {"amp1", amp1},
                {"amp2", amp2},
                {"a_c0", a.c0},
                {"a_amp", a.amp},
                {"a_freq", a.freq}};
    r.finish();
    out[static_cast<size_t>(i)] = std::move(r);
  });
  return out;
}

std::vector<InequalityReport> shear_claims_suite(const SuiteOptions& opt) {
  if (opt.cases < 1) throw ConfigError("shear_claims_suite: need at least one case");

  std::vector<InequalityReport> out(static_cast<size_t>(opt.cases));
  run_cases(opt.cases, [&](int i) {
    const std::uint64_t s = sweep_seed(opt.seed, static_cast<std::uint64_t>(i));
    Rng rng(s);

    const int n = 2 + static_cast<int>(rng.below(5));
    ConstCoeffOperator diag;
    diag.a = Eigen::MatrixXd::Zero(n, n);
    // The claimed lower bound drops the ellipticity factor of the diagonal
    // operator, so it is only true for lambda = min b_i >= 1; draw accordingly.
    for (int k = 0; k < n; ++k) diag.a(k, k) = rng.uniform(1.0, 3.0);

    ShearMap map;
    map.a = Eigen::VectorXd::Zero(n);
    map.a[0] = rng.uniform(-1.0, 1.0);
    for (int k = 1; k < n; ++k) map.a[k] = rng.uniform(-2.0, 2.0);

    ShearTransformResult res = shear_transform(diag, map);
    EllipticityConstants ec = ellipticity_constants(res.op);

    InequalityReport r;
    r.check = "thm_1_3_claims";
    r.lhs = res.lambda_claimed;
    r.rhs = ec.lambda;
    r.seed = s;
    r.constants = {{"lambda_claimed", res.lambda_claimed},
                   {"lambda_computed", ec.lambda},
                   {"Lambda_claimed", res.Lambda_claimed},
                   {"Lambda_computed", ec.Lambda}};
    r.params = {{"n", static_cast<double>(n)}, {"A", map.A()}};
    for (int k = 0; k < n; ++k) r.params.push_back({"b" + std::to_string(k), diag.a(k, k)});
    for (int k = 0; k < n; ++k) r.params.push_back({"a" + std::to_string(k), map.a[k]});
    r.margin = std::min(ec.lambda - res.lambda_claimed, res.Lambda_claimed - ec.Lambda);
    r.holds = ec.lambda >= res.lambda_claimed - 1e-12 && ec.Lambda <= res.Lambda_claimed + 1e-12;
    r.converged = true;
    out[static_cast<size_t>(i)] = std::move(r);
  });
  return out;
}

}  // namespace kornlab
