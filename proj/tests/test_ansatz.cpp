#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "kornlab/ansatz.hpp"
#include "kornlab/errors.hpp"
#include "kornlab/forms.hpp"
#include "kornlab/mesh.hpp"
#include "kornlab/rng.hpp"

using namespace kornlab;

namespace {

ThinDomain2D strip(double h, double l = 1.0) {
  ThinDomain2D d;
  d.l = l;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = ConstantProfile{h};
  return d;
}

}  // namespace

TEST_CASE("separable field is harmonic and pinned at the axial ends") {
  CoshSineField cs = cosh_sine_field(0.07, 0.0, 1.0);
  CHECK(cs.k == doctest::Approx(M_PI).epsilon(1e-15));
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    double x = rng.uniform(0.0, cs.h);
    double y = rng.uniform(cs.a, cs.b);
    Jet2 j = cs.field(x, y);
    double scale = std::abs(j.H(0, 0)) + std::abs(j.H(1, 1)) + 1e-300;
    CHECK(std::abs(j.H(0, 0) + j.H(1, 1)) <= 1e-10 * scale);
  }
  double amp = std::cosh(cs.k * cs.h / 2.0);
  CHECK(std::abs(cs.field.value(0.03, cs.a)) <= 1e-14 * amp);
  CHECK(std::abs(cs.field.value(0.03, cs.b)) <= 1e-14 * amp);
}

TEST_CASE("separable field closed-form norms match quadrature") {
  CoshSineField cs = cosh_sine_field(0.07, 0.0, 1.0);
  AnalyticVectorField U{cs.field, AnalyticScalar::constant(0.0)};
  FieldEnergies e = vector_field_energies(U, strip(cs.h));
  CHECK(e.converged);
  CHECK(e.u_l2sq == doctest::Approx(cs.u_l2sq).epsilon(1e-10));
  CHECK(e.grad == doctest::Approx(cs.grad_l2sq).epsilon(1e-10));
  // with v = 0: |e(U)|^2 = |u_x|^2 + |u_y|^2 / 2
  CHECK(2.0 * e.strain - e.grad == doctest::Approx(cs.ux_l2sq).epsilon(1e-8));

  double r = cs.grad_l2sq / (std::sqrt(cs.u_l2sq * cs.ux_l2sq) / cs.h + cs.ux_l2sq);
  CHECK(cs.ratio() == doctest::Approx(r).epsilon(1e-15));
}

TEST_CASE("separable field ratio is flat in the thickness") {
  double r1 = cosh_sine_field(0.2, 0.0, 1.0).ratio();
  double r2 = cosh_sine_field(0.05, 0.0, 1.0).ratio();
  double slope = std::log(r2 / r1) / std::log(0.05 / 0.2);
  CHECK(std::abs(slope) <= 0.3);
}

TEST_CASE("separable field input validation") {
  CHECK_THROWS_AS(cosh_sine_field(0.1, 1.0, 1.0), BadInterval);
  CHECK_THROWS_AS(cosh_sine_field(0.1, 2.0, 1.0), BadInterval);
  CHECK_THROWS_AS(cosh_sine_field(0.0, 0.0, 1.0), NonPositiveThickness);
}

TEST_CASE("bending ansatz validation") {
  CHECK_THROWS_AS(shear_ansatz(0.1, -0.1, ShearVariant::Kirchhoff), ConfigError);
  CHECK_THROWS_AS(shear_ansatz(0.1, 0.6, ShearVariant::Kirchhoff), ConfigError);
  CHECK_THROWS_AS(shear_ansatz(0.0, 0.5, ShearVariant::Kirchhoff), ConfigError);
  CHECK_THROWS_AS(shear_ansatz(1.0, 0.5, ShearVariant::Kirchhoff), ConfigError);
}

TEST_CASE("kirchhoff variant has no shear strain, the plain one does") {
  ShearAnsatz k = shear_ansatz(0.05, 0.5, ShearVariant::Kirchhoff);
  CHECK(k.y_support == doctest::Approx(1.0 * std::sqrt(0.05)).epsilon(1e-14));
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    double x = rng.uniform(0.0, k.h);
    double y = rng.uniform(0.05 * k.y_support, 0.95 * k.y_support);
    Jet2 ju = k.field.u(x, y);
    Jet2 jv = k.field.v(x, y);
    double scale = std::abs(ju.g(1)) + std::abs(jv.g(0)) + 1e-300;
    CHECK(std::abs(ju.g(1) + jv.g(0)) <= 1e-13 * scale);
  }

  ShearAnsatz p = shear_ansatz(0.05, 0.5, ShearVariant::Paper);
  double x = 0.02, y = 0.3 * p.y_support;
  double shear = p.field.u(x, y).g(1) + p.field.v(x, y).g(0);
  CHECK(std::abs(shear) > 1e-8);
}

TEST_CASE("bending ansatz is compactly supported in the axial variable") {
  ShearAnsatz k = shear_ansatz(0.04, 0.25, ShearVariant::Paper);
  CHECK(k.y_support == doctest::Approx(std::pow(0.04, 0.25)).epsilon(1e-14));
  for (double y : {k.y_support, 1.01 * k.y_support, 2.0 * k.y_support}) {
    CHECK(k.field.u(0.02, y).f == 0.0);
    CHECK(k.field.v(0.02, y).f == 0.0);
  }
  FieldEnergies e = vector_field_energies(k.field, strip(k.h), 96, k.y_support);
  CHECK(e.converged);
  CHECK(e.u_l2sq > 0.0);
  CHECK(e.strain > 0.0);
  CHECK(e.strain <= e.grad * (1.0 + 1e-12));
}

TEST_CASE("rigid motions carry zero strain analytically and after interpolation") {
  AnalyticVectorField rigid = rigid_field(Eigen::Vector2d(0.4, -0.2), 1.3);
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    double x = rng.uniform(-1.0, 1.0), y = rng.uniform(-1.0, 1.0);
    Jet2 ju = rigid.u(x, y);
    Jet2 jv = rigid.v(x, y);
    CHECK(ju.g(0) == 0.0);
    CHECK(jv.g(1) == 0.0);
    CHECK(ju.g(1) + jv.g(0) == 0.0);
  }

  ThinDomain2D d = strip(0.3);
  FieldEnergies e = vector_field_energies(rigid, d);
  CHECK(e.strain <= 1e-14 * e.grad);
  CHECK(e.grad == doctest::Approx(2.0 * 1.3 * 1.3 * 0.3).epsilon(1e-10));

  // bilinear interpolation reproduces affine fields exactly, so the assembled
  // strain energy of the interpolant vanishes too, even on curved meshes
  ThinDomain2D curved;
  curved.l = 1.0;
  curved.phi1 = CosineProfile{0.0, 0.03, 2.0 * M_PI, 0.7};
  curved.phi2 = CosineProfile{0.25, 0.05, 2.0 * M_PI, 0.0};
  Mesh2D m = build_mesh(curved, 5, 11);
  Eigen::VectorXd nodal = interpolate_vector(m, rigid.u, rigid.v);
  double strain_energy = assemble(m, FormKind::Strain).energy(nodal);
  double grad_energy = assemble(m, FormKind::GradVector).energy(nodal);
  CHECK(strain_energy <= 1e-12 * grad_energy);
}

TEST_CASE("point cloud dump shape") {
  AnalyticVectorField rigid = rigid_field(Eigen::Vector2d(1.0, 0.0), 0.5);
  std::ostringstream os;
  write_point_cloud(os, rigid, strip(0.2), 4);
  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "x,y,u,v");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 25);

  // first sample sits at the lower-left corner: u = 1 - 0.5*0 = 1
  std::istringstream again(os.str());
  std::getline(again, line);
  std::getline(again, line);
  CHECK(line.rfind("0,0,1,", 0) == 0);
}
