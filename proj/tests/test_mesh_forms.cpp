#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "kornlab/constraints.hpp"
#include "kornlab/errors.hpp"
#include "kornlab/forms.hpp"
#include "kornlab/mesh.hpp"
#include "kornlab/rng.hpp"

using namespace kornlab;

namespace {

ThinDomain2D unit_square() {
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = ConstantProfile{1.0};
  return d;
}

ThinDomain2D strip(double h, double l = 1.0) {
  ThinDomain2D d;
  d.l = l;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = ConstantProfile{h};
  return d;
}

}  // namespace

TEST_CASE("mesh shape and node placement") {
  Mesh2D m = build_mesh(unit_square(), 2, 2);
  CHECK(m.n_nodes() == 9);
  CHECK(m.n_elements() == 4);
  CHECK(m.node_id(1, 1) == 4);
  CHECK(m.nodes(m.node_id(1, 1), 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.nodes(m.node_id(1, 1), 1) == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(m.face_nodes(Face::Lower).size() == 3);
  CHECK(m.face_nodes(Face::AxialStart).size() == 3);
  for (int id : m.face_nodes(Face::Upper)) CHECK(m.nodes(id, 0) == 1.0);
  for (int id : m.face_nodes(Face::AxialEnd)) CHECK(m.nodes(id, 1) == 1.0);

  Mesh2D thin = build_mesh(strip(0.05), 2, 4);
  CHECK(thin.max_aspect_ratio == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("mesh follows sheared walls exactly") {
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = AffineProfile{0.0, 0.5};
  d.phi2 = AffineProfile{0.05, 0.5};
  Mesh2D m = build_mesh(d, 4, 8);
  for (int j = 0; j <= 8; ++j)
    for (int i = 0; i <= 4; ++i) {
      double y = m.nodes(m.node_id(i, j), 1);
      double expect = 0.5 * y + 0.05 * i / 4.0;
      CHECK(m.nodes(m.node_id(i, j), 0) == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("interpolation hits nodal values") {
  Mesh2D m = build_mesh(unit_square(), 3, 3);
  AnalyticScalar x = AnalyticScalar::coord_x(), y = AnalyticScalar::coord_y();
  AnalyticScalar f = x * x - y * y;
  Eigen::VectorXd nodal = interpolate(m, f);
  for (int i = 0; i < m.n_nodes(); ++i)
    CHECK(nodal(i) == doctest::Approx(f.value(m.nodes(i, 0), m.nodes(i, 1))).epsilon(1e-15));

  Eigen::VectorXd vec = interpolate_vector(m, f, x);
  CHECK(vec.size() == 2 * m.n_nodes());
  CHECK(vec(2 * 5) == nodal(5));
  CHECK(vec(2 * 5 + 1) == doctest::Approx(m.nodes(5, 0)).epsilon(1e-15));
}

TEST_CASE("forms are symmetric positive semidefinite") {
  Mesh2D m = build_mesh(strip(0.3, 1.2), 3, 5);
  for (FormKind kind : {FormKind::MassScalar, FormKind::GradScalar, FormKind::GradVector,
                        FormKind::Strain, FormKind::MassUComponent}) {
    SymmetricForm f = assemble(m, kind);
    Eigen::MatrixXd A = Eigen::MatrixXd(f.A);
    CHECK((A - A.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * (1.0 + A.cwiseAbs().maxCoeff()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (A + A.transpose()));
    CHECK(es.eigenvalues()(0) >= -1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("mass form integrates constants to the area") {
  Mesh2D m = build_mesh(strip(0.4, 2.0), 4, 6);
  SymmetricForm mass = assemble(m, FormKind::MassScalar);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(m.n_nodes());
  CHECK(mass.energy(ones) == doctest::Approx(0.8).epsilon(1e-13));

  // curved walls: area = int (phi2 - phi1) = 0.15 * l by the cosine mean
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = CosineProfile{0.0, 0.02, 2.0 * M_PI, 0.0};
  d.phi2 = CosineProfile{0.15, 0.02, 2.0 * M_PI, 0.0};
  Mesh2D mc = build_mesh(d, 4, 64);
  SymmetricForm mass_c = assemble(mc, FormKind::MassScalar);
  Eigen::VectorXd ones_c = Eigen::VectorXd::Ones(mc.n_nodes());
  // straight-sided elements under-resolve the curve; 64 axial cells reach ~1e-4
  CHECK(mass_c.energy(ones_c) == doctest::Approx(0.15).epsilon(1e-3));
}

TEST_CASE("moments of an interpolated affine field are exact") {
  Mesh2D m = build_mesh(strip(0.5, 2.0), 3, 4);
  AnalyticScalar f = 2.0 * AnalyticScalar::coord_x() + 3.0 * AnalyticScalar::coord_y();
  ScalarMoments mo = scalar_field_moments(m, interpolate(m, f));
  CHECK(mo.l2 == doctest::Approx(46.0 / 3.0).epsilon(1e-13));
  CHECK(mo.dx2 == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(mo.dy2 == doctest::Approx(9.0).epsilon(1e-13));
  CHECK(mo.dxdy == doctest::Approx(6.0).epsilon(1e-13));

  CHECK(scalar_error_l2(m, interpolate(m, f), f) <= 1e-13);
}

TEST_CASE("strain energy never exceeds gradient energy") {
  Mesh2D m = build_mesh(strip(0.2), 3, 9);
  SymmetricForm strain = assemble(m, FormKind::Strain);
  SymmetricForm grad = assemble(m, FormKind::GradVector);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd c(2 * m.n_nodes());
    for (int i = 0; i < c.size(); ++i) c(i) = rng.uniform(-1.0, 1.0);
    CHECK(strain.energy(c) <= grad.energy(c) * (1.0 + 1e-12));
  }
}

TEST_CASE("identity operator energy equals the scalar gradient form") {
  Mesh2D m = build_mesh(strip(0.3), 3, 5);
  FormDescriptor desc;
  desc.kind = FormKind::OperatorEnergy;
  ConstCoeffOperator id;
  id.a = Eigen::MatrixXd::Identity(2, 2);
  desc.op = id;
  SymmetricForm a = assemble(m, desc);
  SymmetricForm b = assemble(m, FormKind::GradScalar);
  CHECK((Eigen::MatrixXd(a.A) - Eigen::MatrixXd(b.A)).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("weighted gradient form with exact wall distance") {
  // delta = distance to the lower wall = x on a straight strip, so the
  // energy of f = x is int x^2 over the domain.
  ThinDomain2D d = strip(0.5, 2.0);
  Mesh2D m = build_mesh(d, 6, 6);
  Gamma1Polyline lower(d, {Face::Lower});
  FormDescriptor desc;
  desc.kind = FormKind::WeightedGrad;
  desc.delta = &lower;
  SymmetricForm w = assemble(m, desc);
  Eigen::VectorXd fx(m.n_nodes());
  for (int i = 0; i < m.n_nodes(); ++i) fx(i) = m.nodes(i, 0);
  CHECK(w.energy(fx) == doctest::Approx(2.0 * std::pow(0.5, 3) / 3.0).epsilon(1e-12));
}

TEST_CASE("dirichlet constraints drop boundary dofs") {
  Mesh2D m = build_mesh(unit_square(), 3, 3);
  ConstraintSet set;
  set.dirichlet.push_back(
      {BoundarySelector{Face::Lower, Face::Upper, Face::AxialStart, Face::AxialEnd},
       ComponentMask::U});
  ConstrainedSystem cs = constrain(m, 1, set);
  CHECK(cs.full_size == 16);
  CHECK(cs.reduced_size == 4);

  Eigen::VectorXd r = Eigen::VectorXd::LinSpaced(4, 1.0, 4.0);
  Eigen::VectorXd full = cs.expand(r);
  for (int id : m.face_nodes(Face::Lower)) CHECK(full(id) == 0.0);
  CHECK(full(m.node_id(1, 1)) != 0.0);
}

TEST_CASE("periodic identification merges the axial seam") {
  Mesh2D m = build_mesh(strip(0.2), 2, 4);
  ConstraintSet set;
  set.periodic.push_back({ComponentMask::U});
  ConstrainedSystem cs = constrain(m, 1, set);
  CHECK(cs.full_size == 15);
  CHECK(cs.reduced_size == 12);

  // expanding any reduced vector gives equal values on the two seams
  Rng rng(3);
  Eigen::VectorXd r(cs.reduced_size);
  for (int i = 0; i < r.size(); ++i) r(i) = rng.uniform(-1.0, 1.0);
  Eigen::VectorXd full = cs.expand(r);
  for (int i = 0; i <= 2; ++i)
    CHECK(full(m.node_id(i, 0)) == full(m.node_id(i, 4)));
}

TEST_CASE("periodic pairing requires compatible walls") {
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = AffineProfile{0.0, 0.3};
  d.phi2 = AffineProfile{0.2, 0.3};
  Mesh2D m = build_mesh(d, 2, 4);
  ConstraintSet set;
  set.periodic.push_back({ComponentMask::U});
  CHECK_THROWS_AS(constrain(m, 1, set), PeriodicIncompatibleProfiles);
}

TEST_CASE("deflation vectors span the requested constants") {
  Mesh2D m = build_mesh(strip(0.2), 2, 4);
  ConstraintSet set;
  set.periodic.push_back({ComponentMask::U});
  set.deflate.push_back({ComponentMask::Both});
  ConstrainedSystem cs = constrain(m, 2, set);
  REQUIRE(cs.deflation.size() == 2);
  // each vector marks every surviving dof of one component
  for (const Eigen::VectorXd& k : cs.deflation)
    CHECK(k.cwiseAbs().maxCoeff() == 1.0);
  CHECK(cs.deflation[0].dot(cs.deflation[1]) == 0.0);
}
