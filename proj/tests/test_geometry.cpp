#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "kornlab/errors.hpp"
#include "kornlab/geometry.hpp"
#include "kornlab/operators.hpp"
#include "kornlab/profile.hpp"

using namespace kornlab;

namespace {

// Central differences as the independent oracle for the closed-form
// derivatives. Step 1e-5 balances truncation and cancellation, so agreement
// is checked at 1e-8 scale.
void check_profile_derivatives(const Profile& p, double y) {
  const double eps = 1e-5;
  ProfileEval e = eval_profile(p, y);
  ProfileEval ep = eval_profile(p, y + eps);
  ProfileEval em = eval_profile(p, y - eps);
  double fd1 = (ep.value - em.value) / (2 * eps);
  double fd2 = (ep.value - 2 * e.value + em.value) / (eps * eps);
  double scale = 1.0 + std::abs(e.d1) + std::abs(e.d2);
  CHECK(std::abs(e.d1 - fd1) <= 1e-8 * scale);
  CHECK(std::abs(e.d2 - fd2) <= 1e-4 * scale);
}

}  // namespace

TEST_CASE("profile evaluations match finite differences") {
  std::vector<Profile> ps = {
      ConstantProfile{0.7},
      AffineProfile{0.2, -1.3},
      CosineProfile{0.1, 0.05, 2.0 * M_PI, 0.4},
      PolynomialProfile{{1.0, -0.5, 0.25, 0.125}},
  };
  for (const Profile& p : ps)
    for (double y : {0.1, 0.37, 0.9}) check_profile_derivatives(p, y);
}

TEST_CASE("derivative_profile is the exact symbolic derivative") {
  Profile p = CosineProfile{0.1, 0.05, 3.0, 0.7};
  Profile dp = derivative_profile(p);
  for (double y : {0.0, 0.3, 1.1}) {
    ProfileEval e = eval_profile(p, y);
    ProfileEval de = eval_profile(dp, y);
    CHECK(de.value == doctest::Approx(e.d1).epsilon(1e-14));
    CHECK(de.d1 == doctest::Approx(e.d2).epsilon(1e-14));
  }
  Profile q = PolynomialProfile{{2.0, 0.0, -3.0}};  // 2 - 3 y^2
  ProfileEval dq = eval_profile(derivative_profile(q), 0.5);
  CHECK(dq.value == doctest::Approx(-3.0).epsilon(1e-15));
}

TEST_CASE("domain metrics on a cosine cap") {
  // phi2 = 0.1 + 0.02 cos(2 pi y): thickness in [0.08, 0.12]
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = CosineProfile{0.1, 0.02, 2.0 * M_PI, 0.0};
  DomainMetrics m = domain_metrics(d);
  CHECK(m.h == doctest::Approx(0.08).epsilon(1e-10));
  CHECK(m.H == doctest::Approx(0.12).epsilon(1e-10));
  CHECK(m.m == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(m.rho1 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(m.rho2 == doctest::Approx(0.02 * 2.0 * M_PI).epsilon(1e-6));
}

TEST_CASE("degenerate thickness is rejected") {
  ThinDomain2D d;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = CosineProfile{0.05, 0.1, 2.0 * M_PI, 0.0};  // dips below zero
  CHECK_THROWS_AS(domain_metrics(d), NonPositiveThickness);
}

TEST_CASE("distance to straight boundary parts is exact") {
  ThinDomain2D d;
  d.l = 2.0;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = ConstantProfile{0.5};

  // Lateral walls: distance is min over the two horizontal lines.
  Gamma1Polyline walls(d, {Face::Lower, Face::Upper});
  CHECK(walls.distance({0.2, 1.0}) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(walls.distance({0.4, 0.3}) == doctest::Approx(0.1).epsilon(1e-12));

  // Axial ends: vertical segments x in [phi1, phi2].
  Gamma1Polyline ends(d, {Face::AxialStart, Face::AxialEnd});
  CHECK(ends.distance({0.25, 0.75}) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(ends.distance({0.25, 1.7}) == doctest::Approx(0.3).epsilon(1e-12));
  // Beyond a segment endpoint the distance is to the corner.
  double corner = std::hypot(0.1, 0.2);
  CHECK(ends.distance({0.6, 0.2}) == doctest::Approx(corner).epsilon(1e-12));
}

TEST_CASE("distance vanishes on the selected faces only") {
  ThinDomain2D d;
  d.l = 1.0;
  d.phi1 = CosineProfile{0.0, 0.02, 2.0 * M_PI, 0.0};
  d.phi2 = CosineProfile{0.15, 0.02, 2.0 * M_PI, 0.0};
  Gamma1Polyline g(d, {Face::Lower});
  for (double y : {0.0, 0.33, 0.8, 1.0}) {
    double x1 = eval_profile(d.phi1, y).value;
    double x2 = eval_profile(d.phi2, y).value;
    CHECK(g.distance({x1, y}) <= 2e-6);   // polyline gap at curved faces
    CHECK(g.distance({x2, y}) >= 0.12);   // opposite face stays far
  }
}

TEST_CASE("empty boundary selector is rejected") {
  ThinDomain2D d;
  d.phi1 = ConstantProfile{0.0};
  d.phi2 = ConstantProfile{0.1};
  CHECK_THROWS_AS(Gamma1Polyline(d, BoundarySelector{}), EmptySelector);
}

TEST_CASE("periodic compatibility of profiles") {
  CHECK(is_periodic_compatible(CosineProfile{0.0, 0.1, 2.0 * M_PI, 0.0}, 1.0));
  CHECK(is_periodic_compatible(ConstantProfile{0.3}, 1.0));
  CHECK(!is_periodic_compatible(AffineProfile{0.0, 0.5}, 1.0));
  CHECK(!is_periodic_compatible(CosineProfile{0.0, 0.1, 3.0, 0.0}, 1.0));
}
