#include "kornlab/ansatz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "kornlab/errors.hpp"
#include "kornlab/quadrature.hpp"

namespace kornlab {

CoshSineField cosh_sine_field(double h, double a, double b) {
  if (!(b > a)) throw BadInterval("cosh_sine_field: requires b > a");
  if (!(h > 0.0)) throw NonPositiveThickness("cosh_sine_field: requires h > 0");
  CoshSineField out;
  out.h = h;
  out.a = a;
  out.b = b;
  const double k = std::acos(-1.0) / (b - a);
  out.k = k;
  out.field = AnalyticScalar([k, h, a](double x, double y) {
    Jet2 X = Jet2::variable(0, x);
    Jet2 Y = Jet2::variable(1, y);
    return cosh(k * (X - h / 2.0)) * sin(k * (Y - a));
  });

  // Separable closed forms: int_0^h cosh^2/sinh^2 of k(x - h/2), and the sin
  // and cos squares each integrate to (b-a)/2 over a half period count.
  double s = std::sinh(k * h) / (2.0 * k);
  double i_cosh2 = h / 2.0 + s;
  double i_sinh2 = s - h / 2.0;
  double i_sin2 = (b - a) / 2.0;
  out.u_l2sq = i_cosh2 * i_sin2;
  out.ux_l2sq = k * k * i_sinh2 * i_sin2;
  out.grad_l2sq = out.ux_l2sq + k * k * i_cosh2 * i_sin2;
  return out;
}

ShearAnsatz shear_ansatz(double h, double alpha, ShearVariant variant, double l) {
  if (!(h > 0.0) || h >= 1.0) throw ConfigError("shear_ansatz: requires h in (0, 1)");
  if (alpha < 0.0 || alpha > 0.5) throw ConfigError("shear_ansatz: requires alpha in [0, 1/2]");
  ShearAnsatz out;
  out.h = h;
  out.alpha = alpha;
  out.l = l;
  out.variant = variant;
  const double sc = std::pow(h, alpha);  // s = y / sc
  out.y_support = l * sc;

  out.field.u = AnalyticScalar([sc, l](double, double y) {
    BumpEval b = eval_bump(y / sc, l);
    Jet2 j;
    j.f = b.f;
    j.g << 0.0, b.d1 / sc;
    j.H.setZero();
    j.H(1, 1) = b.d2 / (sc * sc);
    return j;
  });
  if (variant == ShearVariant::Paper) {
    out.field.v = AnalyticScalar([sc, l](double x, double y) {
      BumpEval b = eval_bump(y / sc, l);
      Jet2 j;
      j.f = -(x / sc) * b.f;
      j.g << -b.f / sc, -(x / sc) * b.d1 / sc;
      j.H(0, 0) = 0.0;
      j.H(0, 1) = j.H(1, 0) = -b.d1 / (sc * sc);
      j.H(1, 1) = -(x / sc) * b.d2 / (sc * sc);
      return j;
    });
  } else {
    out.field.v = AnalyticScalar([sc, l](double x, double y) {
      BumpEval b = eval_bump(y / sc, l);
      Jet2 j;
      j.f = -(x / sc) * b.d1;
      j.g << -b.d1 / sc, -(x / sc) * b.d2 / sc;
      j.H(0, 0) = 0.0;
      j.H(0, 1) = j.H(1, 0) = -b.d2 / (sc * sc);
      j.H(1, 1) = -(x / sc) * b.d3 / (sc * sc);
      return j;
    });
  }
  return out;
}

AnalyticVectorField rigid_field(const Eigen::Vector2d& a, double omega) {
  AnalyticVectorField f;
  f.u = AnalyticScalar::constant(a(0)) + (-omega) * AnalyticScalar::coord_y();
  f.v = AnalyticScalar::constant(a(1)) + omega * AnalyticScalar::coord_x();
  return f;
}

FieldEnergies vector_field_energies(const AnalyticVectorField& U, const ThinDomain2D& d,
                                    int quad_n, double y_hi) {
  const double y_top = y_hi > 0.0 ? std::min(y_hi, d.l) : d.l;
  auto pass = [&](int n) {
    std::array<double, 3> acc{0.0, 0.0, 0.0};
    QuadRule1D qy = composite_gauss(n, 0.0, y_top);
    for (int j = 0; j < qy.size(); ++j) {
      double y = qy.points[static_cast<size_t>(j)];
      double wy = qy.weights[static_cast<size_t>(j)];
      double x0 = eval_profile(d.phi1, y).value;
      double x1 = eval_profile(d.phi2, y).value;
      QuadRule1D qx = composite_gauss(n, x0, x1);
      for (int i = 0; i < qx.size(); ++i) {
        double x = qx.points[static_cast<size_t>(i)];
        double w = wy * qx.weights[static_cast<size_t>(i)];
        Jet2 ju = U.u(x, y);
        Jet2 jv = U.v(x, y);
        double e11 = ju.g(0);
        double e22 = jv.g(1);
        double e12 = 0.5 * (ju.g(1) + jv.g(0));
        acc[0] += w * ju.f * ju.f;
        acc[1] += w * (ju.g.squaredNorm() + jv.g.squaredNorm());
        acc[2] += w * (e11 * e11 + e22 * e22 + 2.0 * e12 * e12);
      }
    }
    return acc;
  };
  std::array<double, 3> coarse = pass(quad_n);
  std::array<double, 3> fine = pass(2 * quad_n);

  FieldEnergies out;
  out.u_l2sq = fine[0];
  out.grad = fine[1];
  out.strain = fine[2];
  double big = std::max({std::abs(fine[0]), std::abs(fine[1]), std::abs(fine[2])});
  for (int t = 0; t < 3; ++t) {
    double denom = std::max(std::abs(fine[static_cast<size_t>(t)]),
                            std::max(1e-12 * big, 1e-300));
    out.drift = std::max(out.drift,
                         std::abs(coarse[static_cast<size_t>(t)] - fine[static_cast<size_t>(t)]) /
                             denom);
  }
  out.converged = out.drift < 1e-8;
  return out;
}

void write_point_cloud(std::ostream& os, const AnalyticVectorField& U, const ThinDomain2D& d,
                       int n) {
  os << "x,y,u,v\n";
  char buf[160];
  for (int j = 0; j <= n; ++j) {
    double y = d.l * j / n;
    double x0 = eval_profile(d.phi1, y).value;
    double x1 = eval_profile(d.phi2, y).value;
    for (int i = 0; i <= n; ++i) {
      double x = x0 + (x1 - x0) * i / n;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", x, y, U.u.value(x, y),
                    U.v.value(x, y));
      os << buf;
    }
  }
}

}  // namespace kornlab
