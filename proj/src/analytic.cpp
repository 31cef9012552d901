#include "kornlab/analytic.hpp"

#include <cmath>

namespace kornlab {

AnalyticScalar operator+(const AnalyticScalar& a, const AnalyticScalar& b) {
  return AnalyticScalar([a, b](double x, double y) { return a(x, y) + b(x, y); });
}

AnalyticScalar operator-(const AnalyticScalar& a, const AnalyticScalar& b) {
  return AnalyticScalar([a, b](double x, double y) { return a(x, y) - b(x, y); });
}

AnalyticScalar operator*(const AnalyticScalar& a, const AnalyticScalar& b) {
  return AnalyticScalar([a, b](double x, double y) { return a(x, y) * b(x, y); });
}

AnalyticScalar operator*(double s, const AnalyticScalar& a) {
  return AnalyticScalar([s, a](double x, double y) { return s * a(x, y); });
}

AnalyticScalar sin_wave(double wx, double wy, double phase) {
  return AnalyticScalar([wx, wy, phase](double x, double y) {
    Jet2 arg = wx * Jet2::variable(0, x) + wy * Jet2::variable(1, y) + phase;
    return sin(arg);
  });
}

AnalyticScalar cos_wave(double wx, double wy, double phase) {
  return AnalyticScalar([wx, wy, phase](double x, double y) {
    Jet2 arg = wx * Jet2::variable(0, x) + wy * Jet2::variable(1, y) + phase;
    return cos(arg);
  });
}

AnalyticScalar profile_field(const Profile& p) {
  return AnalyticScalar(
      [p](double, double y) { return eval_profile_jet(p, Jet2::variable(1, y)); });
}

AnalyticScalar1D operator+(const AnalyticScalar1D& a, const AnalyticScalar1D& b) {
  return AnalyticScalar1D([a, b](double t) { return a(t) + b(t); });
}

AnalyticScalar1D operator*(const AnalyticScalar1D& a, const AnalyticScalar1D& b) {
  return AnalyticScalar1D([a, b](double t) { return a(t) * b(t); });
}

AnalyticScalar1D affine_1d(double c0, double c1) {
  return AnalyticScalar1D([c0, c1](double t) { return c1 * Jet1::variable(0, t) + c0; });
}

AnalyticScalar1D constant_1d(double c) {
  return AnalyticScalar1D([c](double) { return Jet1::constant(c); });
}

AnalyticScalar1D sin_wave_1d(double w, double phase) {
  return AnalyticScalar1D([w, phase](double t) { return sin(w * Jet1::variable(0, t) + phase); });
}

BumpEval eval_bump(double s, double L) {
  BumpEval out;
  if (!(s > 0.0) || !(s < L)) return out;
  double q = s * (L - s);
  if (q <= 1e-3) return out;  // exp(-1/q) underflows together with every derivative
  double qp = L - 2.0 * s;
  double iq = 1.0 / q;
  double iq2 = iq * iq;
  double iq3 = iq2 * iq;
  double iq4 = iq2 * iq2;
  double w1 = qp * iq2;
  double w2 = -2.0 * qp * qp * iq3 - 2.0 * iq2;
  double w3 = 6.0 * qp * qp * qp * iq4 + 12.0 * qp * iq3;
  double f = std::exp(-iq);
  out.f = f;
  out.d1 = w1 * f;
  out.d2 = (w2 + w1 * w1) * f;
  out.d3 = (w3 + 3.0 * w1 * w2 + w1 * w1 * w1) * f;
  return out;
}

AnalyticScalar random_trig_poly(Rng& rng, int terms, double max_freq) {
  struct Term {
    double c, wx, wy, phase;
  };
  std::vector<Term> ts;
  ts.reserve(static_cast<size_t>(terms));
  for (int j = 0; j < terms; ++j) {
    Term t;
    t.c = rng.uniform(-1.0, 1.0);
    t.wx = rng.uniform(-max_freq, max_freq);
    t.wy = rng.uniform(-max_freq, max_freq);
    t.phase = rng.uniform(0.0, 2.0 * M_PI);
    ts.push_back(t);
  }
  return AnalyticScalar([ts](double x, double y) {
    Jet2 acc;
    Jet2 xv = Jet2::variable(0, x);
    Jet2 yv = Jet2::variable(1, y);
    for (const Term& t : ts) acc = acc + t.c * sin(t.wx * xv + t.wy * yv + t.phase);
    return acc;
  });
}

AnalyticScalar1D random_trig_poly_1d(Rng& rng, double a, double b) {
  int degree = 1 + static_cast<int>(rng.below(6));
  double w = 2.0 * M_PI / (b - a);
  std::vector<double> ac(static_cast<size_t>(degree) + 1);
  std::vector<double> bc(static_cast<size_t>(degree) + 1);
  for (auto& c : ac) c = rng.uniform(-1.0, 1.0);
  for (auto& c : bc) c = rng.uniform(-1.0, 1.0);
  return AnalyticScalar1D([ac, bc, w, degree](double t) {
    Jet1 tv = Jet1::variable(0, t);
    Jet1 acc = Jet1::constant(ac[0]);
    for (int k = 1; k <= degree; ++k)
      acc = acc + ac[static_cast<size_t>(k)] * cos((k * w) * tv) +
            bc[static_cast<size_t>(k)] * sin((k * w) * tv);
    return acc;
  });
}

AnalyticScalar cutoff_for(const ThinDomain2D& d, const BoundarySelector& gamma2) {
  DomainMetrics m = domain_metrics(d);
  AnalyticScalar cut = AnalyticScalar::constant(1.0);
  double xscale = 1.0 / m.H;
  if (gamma2.contains(Face::Lower)) {
    Profile p = d.phi1;
    cut = cut * AnalyticScalar([p, xscale](double x, double y) {
            return xscale * (Jet2::variable(0, x) - eval_profile_jet(p, Jet2::variable(1, y)));
          });
  }
  if (gamma2.contains(Face::Upper)) {
    Profile p = d.phi2;
    cut = cut * AnalyticScalar([p, xscale](double x, double y) {
            return xscale * (eval_profile_jet(p, Jet2::variable(1, y)) - Jet2::variable(0, x));
          });
  }
  if (gamma2.contains(Face::AxialStart)) {
    double s = 1.0 / d.l;
    cut = cut * AnalyticScalar([s](double, double y) { return s * Jet2::variable(1, y); });
  }
  if (gamma2.contains(Face::AxialEnd)) {
    double l = d.l;
    cut = cut * AnalyticScalar([l](double, double y) {
            return (1.0 / l) * (Jet2::constant(l) - Jet2::variable(1, y));
          });
  }
  return cut;
}

double max_abs_on_faces(const ThinDomain2D& d, const BoundarySelector& faces,
                        const AnalyticScalar& f, int n) {
  double best = 0.0;
  auto visit = [&](double x, double y) { best = std::max(best, std::abs(f.value(x, y))); };
  for (int i = 0; i <= n; ++i) {
    double y = d.l * i / n;
    if (faces.contains(Face::Lower)) visit(eval_profile(d.phi1, y).value, y);
    if (faces.contains(Face::Upper)) visit(eval_profile(d.phi2, y).value, y);
  }
  for (int i = 0; i <= n; ++i) {
    if (faces.contains(Face::AxialStart)) {
      double x0 = eval_profile(d.phi1, 0.0).value;
      double x1 = eval_profile(d.phi2, 0.0).value;
      visit(x0 + (x1 - x0) * i / n, 0.0);
    }
    if (faces.contains(Face::AxialEnd)) {
      double x0 = eval_profile(d.phi1, d.l).value;
      double x1 = eval_profile(d.phi2, d.l).value;
      visit(x0 + (x1 - x0) * i / n, d.l);
    }
  }
  return best;
}

double max_abs_on_domain(const ThinDomain2D& d, const AnalyticScalar& f, int n) {
  double best = 0.0;
  for (int j = 0; j <= n; ++j) {
    double y = d.l * j / n;
    double x0 = eval_profile(d.phi1, y).value;
    double x1 = eval_profile(d.phi2, y).value;
    for (int i = 0; i <= n; ++i) {
      double x = x0 + (x1 - x0) * i / n;
      best = std::max(best, std::abs(f.value(x, y)));
    }
  }
  return best;
}

}  // namespace kornlab
