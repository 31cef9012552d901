#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "kornlab/checks.hpp"
#include "kornlab/errors.hpp"

using namespace kornlab;

namespace {

ThinDomain2D strip(double h, double l = 1.0) {
  ThinDomain2D d;
  d.l = l;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = ConstantProfile{h};
  return d;
}

double named(const InequalityReport& r, const std::string& name) {
  for (const NamedValue& c : r.constants)
    if (c.name == name) return c.value;
  for (const NamedValue& p : r.params)
    if (p.name == name) return p.value;
  FAIL(("missing named value " + name));
  return 0.0;
}

}  // namespace

TEST_CASE("interval inequality against a closed form") {
  // f(t) = t - 1 on [1, 2] with split 1.5: lhs = 7/24,
  // rhs = 4 * (1/24) + 4 * (1/3) = 3/2
  InequalityReport r = check_hardy(affine_1d(-1.0, 1.0), 1.0, 2.0, 0.5);
  CHECK(r.check == "hardy");
  CHECK(r.lhs == doctest::Approx(7.0 / 24.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(r.margin == doctest::Approx(29.0 / 24.0).epsilon(1e-12));
  CHECK(r.holds);
  CHECK(r.converged);
  CHECK(r.quad_drift <= 1e-12);
  CHECK(r.quad_n == 64);
  CHECK(named(r, "2/eps") == doctest::Approx(4.0));
  CHECK(named(r, "eps") == 0.5);
}

TEST_CASE("interval inequality is translation invariant") {
  const double s = 0.7;
  InequalityReport base = check_hardy(sin_wave_1d(3.0, 0.4), 0.5, 2.1, 0.3, 128);
  InequalityReport shifted =
      check_hardy(sin_wave_1d(3.0, 0.4 - 3.0 * s), 0.5 + s, 2.1 + s, 0.3, 128);
  CHECK(shifted.lhs == doctest::Approx(base.lhs).epsilon(1e-12));
  CHECK(shifted.rhs == doctest::Approx(base.rhs).epsilon(1e-12));
}

TEST_CASE("interval inequality input validation") {
  AnalyticScalar1D f = affine_1d(0.0, 1.0);
  CHECK_THROWS_AS(check_hardy(f, 1.0, 2.0, 0.0), BadInterval);
  CHECK_THROWS_AS(check_hardy(f, 1.0, 2.0, 1.2), BadInterval);
  CHECK_THROWS_AS(check_hardy(f, 1.0, 2.0, -0.1), BadInterval);
  CHECK_THROWS_AS(check_hardy(f, 2.0, 2.0, 0.5), BadInterval);
  CHECK_THROWS_AS(check_hardy(f, 0.0, 2.0, 0.5), BadInterval);
  CHECK_THROWS_AS(check_hardy(f, 1.0, 2.0, 0.5, 32), ConfigError);
}

TEST_CASE("interval inequality edge cases") {
  // eps = 1 puts the split at b: the left side is empty
  InequalityReport full = check_hardy(affine_1d(-1.0, 1.0), 1.0, 2.0, 1.0);
  CHECK(full.lhs == 0.0);
  CHECK(full.holds);

  InequalityReport zero = check_hardy(constant_1d(0.0), 1.0, 2.0, 0.5);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  CHECK(zero.holds);  // verdict keeps absolute slack for the all-zero case
}

TEST_CASE("weighted gradient bound holds for a compliant field") {
  ThinDomain2D d = strip(0.5);
  ConstCoeffOperator op;
  op.a = Eigen::MatrixXd(2, 2);
  op.a << 2.0, -1.0, -1.0, 1.0;
  BoundarySelector gamma1{Face::Lower, Face::Upper};
  AnalyticScalar f =
      cutoff_for(d, {Face::AxialStart, Face::AxialEnd}) * sin_wave(2.0, 3.0, 0.25);

  InequalityReport r = check_weighted_gradient(f, op, d, gamma1);
  CHECK(r.check == "lemma_2_1");
  CHECK(r.holds);
  CHECK(r.converged);
  CHECK(r.lhs > 0.0);

  EllipticityConstants ell = ellipticity_constants(op);
  CHECK(named(r, "lambda") == doctest::Approx(ell.lambda).epsilon(1e-14));
  CHECK(named(r, "Lambda") == doctest::Approx(ell.Lambda).epsilon(1e-14));
  CHECK(named(r, "4nLambda^2/lambda^2+1") ==
        doctest::Approx(4.0 * 2.0 * ell.Lambda * ell.Lambda / (ell.lambda * ell.lambda) + 1.0)
            .epsilon(1e-12));
}

TEST_CASE("weighted gradient bound rejects non-vanishing traces") {
  ThinDomain2D d = strip(0.5);
  ConstCoeffOperator op;
  op.a = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(
      check_weighted_gradient(AnalyticScalar::constant(1.0), op, d, {Face::Lower, Face::Upper}),
      CutoffMissing);
}

TEST_CASE("flattened-operator weighted bound with the traced constant") {
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = CosineProfile{0.0, 0.05, 2.0 * M_PI, 0.0};
  d.phi2 = CosineProfile{0.3, 0.05, 2.0 * M_PI, 0.0};
  OperatorLa op = flatten_operator(d.phi1, d.l);
  AnalyticScalar f =
      cutoff_for(d, {Face::AxialStart, Face::AxialEnd}) * cos_wave(1.5, 2.0, 0.1);

  InequalityReport r = check_weighted_gradient_La(f, op, d, {Face::Lower, Face::Upper});
  CHECK(r.check == "lemma_2_2");
  CHECK(r.holds);
  CHECK(r.converged);

  double lambda = lambda_a(op.M);
  double C = (1.0 / lambda) *
             (1.0 + (16.0 * std::pow(1.0 + op.M * op.M, 2) + 64.0 * op.M * op.M + 16.0 +
                     4.0 * op.M1 * op.M1) /
                        lambda);
  CHECK(named(r, "lambda") == doctest::Approx(lambda).epsilon(1e-14));
  CHECK(named(r, "C") == doctest::Approx(C).epsilon(1e-12));
  CHECK(std::abs(named(r, "boundary_integral")) <= 1e-10);
}

TEST_CASE("flattened-operator bound admits periodic fields") {
  ThinDomain2D d = strip(0.3);
  OperatorLa op = flatten_operator(d.phi1, d.l);
  // periodic in y with period l, nonzero on the axial faces
  AnalyticScalar f = cos_wave(3.0, 2.0 * M_PI, 0.3);
  InequalityReport r = check_weighted_gradient_La(f, op, d, {Face::Lower, Face::Upper});
  CHECK(r.holds);

  // a field that is neither vanishing nor periodic is rejected
  AnalyticScalar bad = AnalyticScalar::coord_x() * AnalyticScalar::coord_y();
  CHECK_THROWS_AS(check_weighted_gradient_La(bad, op, d, {Face::Lower, Face::Upper}),
                  BoundaryConditionViolated);
}

TEST_CASE("boundary integral vanishes for cutoff fields") {
  ThinDomain2D d = strip(0.4);
  OperatorLa op = flatten_operator(d.phi1, d.l);
  AnalyticScalar f =
      cutoff_for(d, {Face::AxialStart, Face::AxialEnd}) * sin_wave(1.0, 2.0, 0.0);
  BoundaryIntegralBreakdown b = boundary_integral_terms(f, op, d);
  // the cutoff is exactly zero on the axial faces and delta is exactly zero
  // on the walls, so every face term is a sum of exact zeros
  CHECK(std::abs(b.lower) <= 1e-15);
  CHECK(std::abs(b.upper) <= 1e-15);
  CHECK(std::abs(b.axial_start) <= 1e-15);
  CHECK(std::abs(b.axial_end) <= 1e-15);
  CHECK(std::abs(b.total) <= 1e-15);
}

TEST_CASE("boundary integral cancels across a periodic seam") {
  ThinDomain2D d = strip(0.4);
  OperatorLa op = flatten_operator(d.phi1, d.l);
  AnalyticScalar f = cos_wave(3.0, 2.0 * M_PI, 0.3);
  BoundaryIntegralBreakdown b = boundary_integral_terms(f, op, d);
  CHECK(std::abs(b.axial_start) > 1e-6);
  CHECK(std::abs(b.axial_start + b.axial_end) <= 1e-10 * std::abs(b.axial_start));
  CHECK(std::abs(b.total) <= 1e-10 * std::abs(b.axial_start));

  AnalyticScalar generic = AnalyticScalar::coord_x() * AnalyticScalar::coord_y();
  CHECK(std::abs(check_boundary_integral(generic, op, d)) > 1e-8);
}
