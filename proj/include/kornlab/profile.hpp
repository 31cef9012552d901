#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "kornlab/jets.hpp"

namespace kornlab {

// One-dimensional boundary profiles x = p(y). Evaluation returns exact
// closed-form derivatives; nothing here is differentiated numerically.

struct ConstantProfile {
  double c = 0.0;
};

struct AffineProfile {
  double c0 = 0.0;
  double c1 = 0.0;
};

// p(y) = c0 + amp * cos(freq * y + phase)
struct CosineProfile {
  double c0 = 0.0;
  double amp = 0.0;
  double freq = 0.0;
  double phase = 0.0;
};

// p(y) = sum_k coeffs[k] * y^k
struct PolynomialProfile {
  std::vector<double> coeffs;
};

using Profile = std::variant<ConstantProfile, AffineProfile, CosineProfile, PolynomialProfile>;

struct ProfileEval {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

ProfileEval eval_profile(const Profile& p, double y);

// Lifts a profile into jet arithmetic: p(y) for a jet-valued y.
template <int N>
Jet<double, N> eval_profile_jet(const Profile& p, const Jet<double, N>& y) {
  ProfileEval e = eval_profile(p, y.f);
  return apply_unary(y, e.value, e.d1, e.d2);
}

// p(0) = p(l) and p'(0) = p'(l) within tol.
bool is_periodic_compatible(const Profile& p, double l, double tol = 1e-12);

// Max of f over [a, b]: dense grid scan, then ternary refinement of the
// bracketing cell. Accurate to ~1e-8 for the smooth profile families.
double max_on_interval(const std::function<double(double)>& f, double a, double b,
                       int n_samples = 2048);

double min_on_interval(const std::function<double(double)>& f, double a, double b,
                       int n_samples = 2048);

}  // namespace kornlab
