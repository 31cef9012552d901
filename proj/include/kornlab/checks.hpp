#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kornlab/analytic.hpp"
#include "kornlab/geometry.hpp"
#include "kornlab/operators.hpp"

namespace kornlab {

struct NamedValue {
  std::string name;
  double value = 0.0;
};

// Outcome of a single explicit-constant inequality evaluation. Every integral
// is computed twice, at quad_n and 2*quad_n; `converged` records whether the
// worst relative drift stayed under 1e-6 (reports that fail this are excluded
// from suite verdicts). Verdict rule: holds iff lhs <= rhs*(1+1e-8) + 1e-14.
struct InequalityReport {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool holds = false;
  bool converged = true;
  double quad_drift = 0.0;
  int quad_n = 0;
  std::uint64_t seed = 0;
  std::vector<NamedValue> constants;
  std::vector<NamedValue> params;

  static bool verdict(double lhs, double rhs) { return lhs <= rhs * (1.0 + 1e-8) + 1e-14; }
  void finish() {
    margin = rhs - lhs;
    holds = verdict(lhs, rhs);
  }
};

// Interval inequality with an explicit split point:
//   int_{a+eps(b-a)}^b f^2  <=  (2/eps) int_a^{a+eps(b-a)} f^2
//                              + 4 int_a^b f'(t)^2 (b-t)^2 dt.
// Requires b > a > 0 and eps in (0, 1] (BadInterval otherwise) and
// quad_n >= 64 points per subinterval (ConfigError).
InequalityReport check_hardy(const AnalyticScalar1D& f, double a, double b, double eps,
                             int quad_n = 64);

// Weighted gradient bound with explicit ellipticity constants, delta the
// distance to the selected boundary part Gamma1:
//   |delta grad f|^2 <= (4 n Lambda^2/lambda^2 + 1) |f|^2
//                      + (1/lambda^2) |delta^2 L(f)|^2.
// f must vanish on the complementary boundary part (CutoffMissing if its
// sampled trace exceeds 1e-10 times the field scale).
InequalityReport check_weighted_gradient(const AnalyticScalar& f, const ConstCoeffOperator& op,
                                         const ThinDomain2D& d, const BoundarySelector& gamma1,
                                         int quad_n = 24, int delta_resolution = 512);

// Same weighted bound for the flattening operator, with the proof-traced
// constant C(M, M1) = (1/lambda)(1 + (16(1+M^2)^2 + 64 M^2 + 16 + 4 M1^2)/lambda),
// lambda = lambda_a(M):
//   |delta grad f|^2 <= C(M, M1) (|(1+delta) f|^2 + |delta^2 L_a(f)|^2).
// Admissible when f vanishes on the complement of Gamma1 or when the
// compatibility boundary integral is ~0; BoundaryConditionViolated when the
// integral exceeds 1e-8 times the field scale.
InequalityReport check_weighted_gradient_La(const AnalyticScalar& f, const OperatorLa& op,
                                            const ThinDomain2D& d,
                                            const BoundarySelector& gamma1, int quad_n = 24,
                                            int delta_resolution = 512);

struct BoundaryIntegralBreakdown {
  double total = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double axial_start = 0.0;
  double axial_end = 0.0;
};

// Compatibility integral for the weighted L_a bound:
//   \oint f delta^2 (f_x nu_1 (1+a^2) - 2 a f_x nu_2 + f_y nu_2) dS,
// reported per face. delta is the distance to Gamma1 and vanishes identically
// on Gamma1 faces.
BoundaryIntegralBreakdown boundary_integral_terms(
    const AnalyticScalar& f, const OperatorLa& op, const ThinDomain2D& d, int quad_n = 64,
    const BoundarySelector& gamma1 = BoundarySelector{Face::Lower, Face::Upper},
    int delta_resolution = 512);

double check_boundary_integral(
    const AnalyticScalar& f, const OperatorLa& op, const ThinDomain2D& d, int quad_n = 64,
    const BoundarySelector& gamma1 = BoundarySelector{Face::Lower, Face::Upper},
    int delta_resolution = 512);

}  // namespace kornlab
