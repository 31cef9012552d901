#pragma once

#include <Eigen/Dense>

#include "kornlab/jets.hpp"
#include "kornlab/profile.hpp"

namespace kornlab {

// Constant-coefficient second-order operator L(u) = sum_ij a_ij d2u/dx_i dx_j.
struct ConstCoeffOperator {
  Eigen::MatrixXd a;
  int n() const { return static_cast<int>(a.rows()); }
};

struct EllipticityConstants {
  double lambda = 0.0;  // smallest eigenvalue of the symmetric part
  double Lambda = 0.0;  // max over columns j of sum_i |a_ij|
};

// Throws NotElliptic when lambda <= 0.
EllipticityConstants ellipticity_constants(const ConstCoeffOperator& op);

// Smallest eigenvalue of [[1+a^2, -a], [-a, 1]], in closed form. Uses |a|;
// the matrix only sees a through even powers and |a|.
double lambda_a(double a);

// Change of variables y1 = x1 - a[0] - sum_{i>=2} a[i-1] x_i (shear to a
// hyperplane through the origin). a[0] is the offset; entries 1.. are the
// shear coefficients.
struct ShearMap {
  Eigen::VectorXd a;
  int n() const { return static_cast<int>(a.size()); }
  // Largest |shear coefficient|; the offset does not enter any derivative.
  double A() const;
};

struct ShearTransformResult {
  ConstCoeffOperator op;    // coefficients in the flattened frame
  double lambda_claimed;    // lambda_a(A) / (n - 1)
  double Lambda_claimed;    // Lambda_in * (1 + (n-1)(A + A^2))
};

// Input must be diagonal (throws MixedTermsPresent otherwise). The
// transformed coefficients come from the chain rule:
//   a'_11 = b_1 + sum_{i>=2} b_i a_i^2,  a'_{1i} = a'_{i1} = -b_i a_i,  a'_ii = b_i.
ShearTransformResult shear_transform(const ConstCoeffOperator& diag_op, const ShearMap& map);

// Variable-coefficient operator
//   L_a(u) = (1 + a(y)^2) u_xx - 2 a(y) u_xy + u_yy - a'(y) u_x,
// with a a profile on [0, l]. Identical to div(A_a grad u) for
// A_a(y) = [[1 + a^2, -a], [-a, 1]], which is what the assembly uses.
struct OperatorLa {
  Profile a;
  double l = 1.0;
  double M = 0.0;   // sup |a|
  double M1 = 0.0;  // sup |a'|
};

OperatorLa make_operator_la(const Profile& a, double l);

// Exact symbolic derivative of a profile (closed under the profile families).
Profile derivative_profile(const Profile& p);

// Flattening x1 = x - phi1(y) of a thin domain turns the Laplacian into
// L_a with a = phi1'.
OperatorLa flatten_operator(const Profile& phi1, double l);

// Conservative ellipticity bounds over the whole y-range:
// lambda = lambda_a(M), Lambda = 1 + M + M^2.
EllipticityConstants ellipticity_constants(const OperatorLa& op);

Eigen::Matrix2d la_coefficient_matrix(const OperatorLa& op, double y);

// L applied to a second-order jet at a point (2D only).
double apply_operator(const ConstCoeffOperator& op, const Jet2& f);
double apply_operator(const OperatorLa& op, const Jet2& f, double y);

}  // namespace kornlab
