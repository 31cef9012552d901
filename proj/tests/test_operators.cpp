#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "kornlab/errors.hpp"
#include "kornlab/operators.hpp"
#include "kornlab/rng.hpp"

using namespace kornlab;

TEST_CASE("ellipticity constants of a fixed matrix") {
  ConstCoeffOperator op;
  op.a = Eigen::MatrixXd{{2.0, -1.0}, {-1.0, 1.0}};
  EllipticityConstants ec = ellipticity_constants(op);
  CHECK(ec.lambda == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  CHECK(ec.Lambda == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("non-elliptic operators are rejected") {
  ConstCoeffOperator op;
  op.a = Eigen::MatrixXd{{1.0, 2.0}, {2.0, 1.0}};  // eigenvalues 3, -1
  CHECK_THROWS_AS(ellipticity_constants(op), NotElliptic);
}

TEST_CASE("lambda_a matches the brute-force eigenvalue") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    double a = rng.uniform(-10.0, 10.0);
    Eigen::Matrix2d m;
    m << 1.0 + a * a, -std::abs(a), -std::abs(a), 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
    CHECK(std::abs(lambda_a(a) - es.eigenvalues()(0)) <= 1e-12);
  }
  CHECK(lambda_a(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  // a = 1 gives the matrix [[2,-1],[-1,1]] with smallest eigenvalue (3-sqrt5)/2
  CHECK(lambda_a(1.0) == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  CHECK(lambda_a(-1.0) == doctest::Approx(lambda_a(1.0)).epsilon(1e-15));
}

TEST_CASE("shear transform of the 2d unit example") {
  ConstCoeffOperator op;
  op.a = Eigen::MatrixXd::Identity(2, 2);
  ShearMap map;
  map.a = Eigen::VectorXd{{0.3, 1.0}};  // offset 0.3, shear 1
  ShearTransformResult r = shear_transform(op, map);
  CHECK(r.op.a(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.op.a(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r.op.a(1, 0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r.op.a(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  // here the claimed lower bound is attained exactly: lambda_a(1)/(n-1)
  EllipticityConstants ec = ellipticity_constants(r.op);
  CHECK(r.lambda_claimed == doctest::Approx(ec.lambda).epsilon(1e-12));
  CHECK(r.Lambda_claimed == doctest::Approx(1.0 * (1.0 + 1.0 * (1.0 + 1.0))).epsilon(1e-15));
}

TEST_CASE("shear transform of a 3d diagonal example") {
  ConstCoeffOperator op;
  op.a = Eigen::Vector3d(1.0, 2.0, 1.0).asDiagonal();
  ShearMap map;
  map.a = Eigen::VectorXd{{0.0, 0.5, -0.5}};
  ShearTransformResult r = shear_transform(op, map);
  // a'_11 = b1 + b2 a2^2 + b3 a3^2, a'_1i = -b_i a_i, a'_ii = b_i
  CHECK(r.op.a(0, 0) == doctest::Approx(1.0 + 2.0 * 0.25 + 1.0 * 0.25).epsilon(1e-15));
  CHECK(r.op.a(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r.op.a(0, 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.op.a(1, 1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.op.a(2, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.op.a(1, 2) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.op.a == r.op.a.transpose().eval());

  // A = max shear magnitude = 0.5; Lambda_in = 2
  CHECK(r.lambda_claimed == doctest::Approx(lambda_a(0.5) / 2.0).epsilon(1e-14));
  CHECK(r.Lambda_claimed == doctest::Approx(2.0 * (1.0 + 2.0 * 0.75)).epsilon(1e-14));
}

TEST_CASE("shear transform equals the congruence T diag(b) T'") {
  // The substitution y1 = x1 - a1 - sum a_i x_i has Jacobian J with
  // dy1/dx = (1, -a_2, ..., -a_n) and dy_i/dx_i = 1. The transformed
  // coefficient matrix of sum b_i d^2/dy_i^2 is J' diag(b)... seen from the
  // x side it is T diag(b) T' with T = J^{-T}; both orderings are checked
  // against the chain rule on quadratics below, here against the closed form.
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) b(i) = rng.uniform(0.2, 3.0);
    ShearMap map;
    map.a = Eigen::VectorXd(n);
    map.a(0) = rng.uniform(-1.0, 1.0);
    for (int i = 1; i < n; ++i) map.a(i) = rng.uniform(-2.0, 2.0);

    ConstCoeffOperator op;
    op.a = b.asDiagonal();
    ShearTransformResult r = shear_transform(op, map);

    Eigen::MatrixXd T = Eigen::MatrixXd::Identity(n, n);
    for (int i = 1; i < n; ++i) T(i, 0) = -map.a(i);
    Eigen::MatrixXd expect = T.transpose() * b.asDiagonal() * T;
    CHECK((r.op.a - expect).cwiseAbs().maxCoeff() <= 1e-13 * expect.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("shear transform preserves the operator on quadratics") {
  // u(x) = v(y(x)) for the 2d map; L(u) in x coordinates must equal L'(v) in
  // y coordinates when v is quadratic (exact second-order jets, no remainder).
  ConstCoeffOperator op;
  op.a = Eigen::Vector2d(1.4, 0.6).asDiagonal();
  ShearMap map;
  map.a = Eigen::VectorXd{{0.2, 0.8}};
  ShearTransformResult r = shear_transform(op, map);

  Eigen::Matrix2d C;
  C << 0.9, -0.4, -0.4, 1.7;  // v(y) = y' C y
  // H_u = J' H_v J with J = dy/dx; T below is J', so H_u = T (2C) T'
  Eigen::Matrix2d T = Eigen::Matrix2d::Identity();
  T(1, 0) = -map.a(1);
  Eigen::Matrix2d Hu = T * (2.0 * C) * T.transpose();
  double Lu = op.a(0, 0) * Hu(0, 0) + op.a(1, 1) * Hu(1, 1);
  double Lpv = (r.op.a.array() * (2.0 * C).array()).sum();
  CHECK(Lu == doctest::Approx(Lpv).epsilon(1e-13));
}

TEST_CASE("mixed input terms are rejected") {
  ConstCoeffOperator op;
  op.a = Eigen::MatrixXd{{1.0, 0.1}, {0.1, 1.0}};
  ShearMap map;
  map.a = Eigen::VectorXd{{0.0, 0.5}};
  CHECK_THROWS_AS(shear_transform(op, map), MixedTermsPresent);
}

TEST_CASE("flatten operator carries the wall slope") {
  Profile wall = CosineProfile{0.0, 0.03, 2.0 * M_PI, 0.0};
  OperatorLa la = flatten_operator(wall, 1.0);
  CHECK(la.M == doctest::Approx(0.03 * 2.0 * M_PI).epsilon(1e-6));
  CHECK(la.M1 == doctest::Approx(0.03 * 4.0 * M_PI * M_PI).epsilon(1e-6));

  // coefficient matrix at y: [[1+a^2, -a], [-a, 1]] with a = wall'(y)
  double y = 0.37;
  double a = eval_profile(wall, y).d1;
  Eigen::Matrix2d A = la_coefficient_matrix(la, y);
  CHECK(A(0, 0) == doctest::Approx(1.0 + a * a).epsilon(1e-13));
  CHECK(A(0, 1) == doctest::Approx(-a).epsilon(1e-13));
  CHECK(A(1, 1) == doctest::Approx(1.0).epsilon(1e-15));

  EllipticityConstants ec = ellipticity_constants(la);
  CHECK(ec.lambda == doctest::Approx(lambda_a(la.M)).epsilon(1e-12));
  CHECK(ec.Lambda == doctest::Approx(1.0 + la.M + la.M * la.M).epsilon(1e-12));
}

TEST_CASE("apply_operator contracts the jet hessian") {
  ConstCoeffOperator op;
  op.a = Eigen::MatrixXd{{2.0, -1.0}, {-1.0, 1.0}};
  Jet2 f;
  f.H << 3.0, 0.5, 0.5, -1.0;
  CHECK(apply_operator(op, f) == doctest::Approx(2.0 * 3.0 - 1.0 - 1.0).epsilon(1e-14));

  OperatorLa la = flatten_operator(AffineProfile{0.0, 0.4}, 1.0);
  // constant slope: L_a(f) = (1+a^2) f_xx - 2 a f_xy + f_yy, a' = 0
  double expect = (1.0 + 0.16) * 3.0 - 2.0 * 0.4 * 0.5 + (-1.0);
  CHECK(apply_operator(la, f, 0.5) == doctest::Approx(expect).epsilon(1e-13));
}
