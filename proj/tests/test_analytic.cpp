#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "kornlab/analytic.hpp"
#include "kornlab/geometry.hpp"
#include "kornlab/profile.hpp"
#include "kornlab/rng.hpp"

using namespace kornlab;

namespace {

// Independent oracle for jet propagation: central differences of the values.
void check_jet_against_fd(const AnalyticScalar& f, double x, double y) {
  const double eps = 1e-5;
  Jet2 j = f(x, y);
  double fpx = f.value(x + eps, y), fmx = f.value(x - eps, y);
  double fpy = f.value(x, y + eps), fmy = f.value(x, y - eps);
  CHECK(std::abs(j.g(0) - (fpx - fmx) / (2 * eps)) <= 1e-7);
  CHECK(std::abs(j.g(1) - (fpy - fmy) / (2 * eps)) <= 1e-7);
  double hxx = (fpx - 2 * j.f + fmx) / (eps * eps);
  double hyy = (fpy - 2 * j.f + fmy) / (eps * eps);
  double hxy = (f.value(x + eps, y + eps) - f.value(x + eps, y - eps) -
                f.value(x - eps, y + eps) + f.value(x - eps, y - eps)) /
               (4 * eps * eps);
  CHECK(std::abs(j.H(0, 0) - hxx) <= 1e-4);
  CHECK(std::abs(j.H(1, 1) - hyy) <= 1e-4);
  CHECK(std::abs(j.H(0, 1) - hxy) <= 1e-4);
  CHECK(j.H(0, 1) == doctest::Approx(j.H(1, 0)).epsilon(1e-15));
}

}  // namespace

TEST_CASE("jet derivatives of composite expressions match finite differences") {
  AnalyticScalar x = AnalyticScalar::coord_x();
  AnalyticScalar y = AnalyticScalar::coord_y();
  AnalyticScalar f = sin_wave(2.0, -1.0, 0.3) * cos_wave(0.5, 1.5, 0.0) + x * y * y;
  for (double px : {0.1, 0.7})
    for (double py : {-0.2, 0.9}) check_jet_against_fd(f, px, py);

  Rng rng(7);
  AnalyticScalar g = random_trig_poly(rng, 3, 3.0);
  check_jet_against_fd(g, 0.05, 0.6);
}

TEST_CASE("random generators are fully seed-determined") {
  Rng r1(42), r2(42);
  AnalyticScalar f1 = random_trig_poly(r1, 4, 2.0);
  AnalyticScalar f2 = random_trig_poly(r2, 4, 2.0);
  for (double x : {0.1, 0.9})
    for (double y : {0.2, 0.5}) CHECK(f1.value(x, y) == f2.value(x, y));

  Rng r3(42), r4(43);
  AnalyticScalar1D g3 = random_trig_poly_1d(r3, 1.0, 2.0);
  AnalyticScalar1D g4 = random_trig_poly_1d(r4, 1.0, 2.0);
  bool differs = false;
  for (double t = 1.05; t < 2.0; t += 0.1) differs |= g3.value(t) != g4.value(t);
  CHECK(differs);
}

TEST_CASE("bump vanishes to all orders at the support ends") {
  const double L = 1.0;
  for (double s : {0.0, L, -0.3, L + 0.4}) {
    BumpEval e = eval_bump(s, L);
    CHECK(e.f == 0.0);
    CHECK(e.d1 == 0.0);
    CHECK(e.d2 == 0.0);
    CHECK(e.d3 == 0.0);
  }
  // interior values are positive and the derivative oracle holds
  BumpEval c = eval_bump(0.5, L);
  CHECK(c.f == doctest::Approx(std::exp(-4.0)).epsilon(1e-12));
  const double eps = 1e-6;
  BumpEval p = eval_bump(0.5 + eps, L), m = eval_bump(0.5 - eps, L);
  CHECK(std::abs((p.f - m.f) / (2 * eps) - c.d1) <= 1e-8);
  CHECK(std::abs((p.d1 - m.d1) / (2 * eps) - c.d2) <= 1e-6);
  CHECK(std::abs((p.d2 - m.d2) / (2 * eps) - c.d3) <= 1e-4);
  CHECK(c.d1 == doctest::Approx(0.0).epsilon(1e-15));  // symmetric peak
}

TEST_CASE("cutoff vanishes exactly on the selected faces") {
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = CosineProfile{0.0, 0.01, 2.0 * M_PI, 0.0};
  d.phi2 = CosineProfile{0.12, 0.01, 2.0 * M_PI, 0.5};

  BoundarySelector gamma2{Face::Lower, Face::AxialEnd};
  AnalyticScalar cut = cutoff_for(d, gamma2);
  CHECK(max_abs_on_faces(d, gamma2, cut) <= 1e-14);
  CHECK(max_abs_on_faces(d, {Face::Upper}, cut) > 1e-3);
  CHECK(max_abs_on_faces(d, {Face::AxialStart}, cut) > 1e-3);

  // interior point keeps a healthy value
  CHECK(cut.value(0.06, 0.5) > 1e-3);
}

TEST_CASE("face and domain maxima see the boundary") {
  ThinDomain2D d;
  d.l = 2.0;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = ConstantProfile{0.5};
  AnalyticScalar f = AnalyticScalar::coord_x() + AnalyticScalar::coord_y();
  CHECK(max_abs_on_faces(d, {Face::AxialStart}, f) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(max_abs_on_faces(d, {Face::AxialEnd}, f) == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(max_abs_on_domain(d, f) == doctest::Approx(2.5).epsilon(1e-9));
}
