#pragma once

#include <functional>
#include <string>

#include "kornlab/geometry.hpp"
#include "kornlab/jets.hpp"
#include "kornlab/rng.hpp"

namespace kornlab {

// Closed-form scalar field on the plane. Evaluation returns the full
// second-order jet; derivatives are propagated through the expression, never
// finite-differenced. Composition happens through jet algebra, so sums and
// products of the built-in pieces stay exact.
class AnalyticScalar {
 public:
  using Fn = std::function<Jet2(double, double)>;

  AnalyticScalar() : fn_([](double, double) { return Jet2(); }) {}
  explicit AnalyticScalar(Fn fn) : fn_(std::move(fn)) {}

  Jet2 operator()(double x, double y) const { return fn_(x, y); }
  double value(double x, double y) const { return fn_(x, y).f; }

  static AnalyticScalar constant(double c) {
    return AnalyticScalar([c](double, double) { return Jet2::constant(c); });
  }
  static AnalyticScalar coord_x() {
    return AnalyticScalar([](double x, double) { return Jet2::variable(0, x); });
  }
  static AnalyticScalar coord_y() {
    return AnalyticScalar([](double, double y) { return Jet2::variable(1, y); });
  }

 private:
  Fn fn_;
};

AnalyticScalar operator+(const AnalyticScalar& a, const AnalyticScalar& b);
AnalyticScalar operator-(const AnalyticScalar& a, const AnalyticScalar& b);
AnalyticScalar operator*(const AnalyticScalar& a, const AnalyticScalar& b);
AnalyticScalar operator*(double s, const AnalyticScalar& a);

// sin(wx * x + wy * y + phase)
AnalyticScalar sin_wave(double wx, double wy, double phase);
AnalyticScalar cos_wave(double wx, double wy, double phase);

// p(y) lifted to a field of (x, y).
AnalyticScalar profile_field(const Profile& p);

// One-dimensional analogue, used by the interval inequality checks.
class AnalyticScalar1D {
 public:
  using Fn = std::function<Jet1(double)>;

  AnalyticScalar1D() : fn_([](double) { return Jet1(); }) {}
  explicit AnalyticScalar1D(Fn fn) : fn_(std::move(fn)) {}

  Jet1 operator()(double t) const { return fn_(t); }
  double value(double t) const { return fn_(t).f; }

 private:
  Fn fn_;
};

AnalyticScalar1D operator+(const AnalyticScalar1D& a, const AnalyticScalar1D& b);
AnalyticScalar1D operator*(const AnalyticScalar1D& a, const AnalyticScalar1D& b);

AnalyticScalar1D affine_1d(double c0, double c1);
AnalyticScalar1D constant_1d(double c);
AnalyticScalar1D sin_wave_1d(double w, double phase);

// Smooth compactly supported bump f(s) = exp(-1/(s(L-s))) on (0, L),
// extended by zero, with derivatives through third order. All derivatives
// vanish at the endpoints; below q = s(L-s) <= 1e-3 every value rounds to
// exactly zero in double precision and is returned as such.
struct BumpEval {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};
BumpEval eval_bump(double s, double L);

// Random generators used by the checker suites. Shapes and ranges are fixed
// here so seeds fully determine the scenario.

// Sum of `terms` sines, amplitudes in [-1,1], frequencies in [-max_freq, max_freq].
AnalyticScalar random_trig_poly(Rng& rng, int terms, double max_freq);

// Trig polynomial of random degree <= 6 on [a, b], coefficients in [-1, 1],
// base frequency 2*pi/(b-a).
AnalyticScalar1D random_trig_poly_1d(Rng& rng, double a, double b);

// Product of C^2 factors vanishing on each selected face:
// (x - phi1(y)) and (phi2(y) - x) scaled by sup thickness, y/l and (l-y)/l.
AnalyticScalar cutoff_for(const ThinDomain2D& d, const BoundarySelector& gamma2);

// Max |f| over `n` sample points of each selected face.
double max_abs_on_faces(const ThinDomain2D& d, const BoundarySelector& faces,
                        const AnalyticScalar& f, int n = 64);

// Max |f| over an n x n sample grid of the closed domain.
double max_abs_on_domain(const ThinDomain2D& d, const AnalyticScalar& f, int n = 32);

}  // namespace kornlab
