#pragma once

#include <Eigen/Dense>
#include <ostream>

#include "kornlab/analytic.hpp"
#include "kornlab/geometry.hpp"

namespace kornlab {

struct AnalyticVectorField {
  AnalyticScalar u;
  AnalyticScalar v;
};

// u = cosh(k (x - h/2)) sin(k (y - a)), k = pi/(b - a), on [0,h] x [a,b].
// Harmonic, vanishes on y = a and y = b, and realizes the bounded mixed
// ratio: all three norms have separable closed forms.
struct CoshSineField {
  AnalyticScalar field;
  double h = 0.0;
  double a = 0.0;
  double b = 0.0;
  double k = 0.0;
  double u_l2sq = 0.0;     // |u|^2
  double ux_l2sq = 0.0;    // |u_x|^2 (thin direction)
  double grad_l2sq = 0.0;  // |grad u|^2

  double ratio() const {
    return grad_l2sq / (std::sqrt(u_l2sq * ux_l2sq) / h + ux_l2sq);
  }
};

// Requires b > a and h > 0 (BadInterval / NonPositiveThickness).
CoshSineField cosh_sine_field(double h, double a, double b);

// Bending-type displacement built from the compactly supported bump
// f(s) = exp(-1/(s(l-s))) in the scaled axial variable s = y / h^alpha
// (y-support [0, l h^alpha]):
//   Paper      U = ( f(s), -(x/h^alpha) f(s)  )
//   Kirchhoff  U = ( f(s), -(x/h^alpha) f'(s) )
// The Kirchhoff variant has identically vanishing shear strain.
enum class ShearVariant { Paper, Kirchhoff };

struct ShearAnsatz {
  AnalyticVectorField field;
  double h = 0.0;
  double alpha = 0.0;
  double l = 1.0;
  double y_support = 0.0;  // l * h^alpha
  ShearVariant variant = ShearVariant::Kirchhoff;
};

// Requires alpha in [0, 1/2] and h in (0, 1) (ConfigError).
ShearAnsatz shear_ansatz(double h, double alpha, ShearVariant variant, double l = 1.0);

// U = (a1 - omega y, a2 + omega x): zero strain, |grad U|^2 = 2 omega^2 area.
AnalyticVectorField rigid_field(const Eigen::Vector2d& a, double omega);

struct FieldEnergies {
  double u_l2sq = 0.0;   // first component only
  double grad = 0.0;     // |grad U|^2
  double strain = 0.0;   // |e(U)|^2
  double drift = 0.0;    // worst relative change under quadrature doubling
  bool converged = true;
};

// Energies over the strip by tensor quadrature at quad_n and 2*quad_n points
// per direction; converged = drift < 1e-8. When y_hi > 0 the axial
// integration stops there (for compactly supported fields).
FieldEnergies vector_field_energies(const AnalyticVectorField& U, const ThinDomain2D& d,
                                    int quad_n = 96, double y_hi = -1.0);

// n x n sample grid as "x,y,u,v" rows with full-precision numbers.
void write_point_cloud(std::ostream& os, const AnalyticVectorField& U, const ThinDomain2D& d,
                       int n = 32);

}  // namespace kornlab
