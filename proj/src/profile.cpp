#include "kornlab/profile.hpp"

#include <cmath>

namespace kornlab {

ProfileEval eval_profile(const Profile& p, double y) {
  ProfileEval out;
  if (const auto* c = std::get_if<ConstantProfile>(&p)) {
    out.value = c->c;
  } else if (const auto* a = std::get_if<AffineProfile>(&p)) {
    out.value = a->c0 + a->c1 * y;
    out.d1 = a->c1;
  } else if (const auto* cs = std::get_if<CosineProfile>(&p)) {
    double arg = cs->freq * y + cs->phase;
    out.value = cs->c0 + cs->amp * std::cos(arg);
    out.d1 = -cs->amp * cs->freq * std::sin(arg);
    out.d2 = -cs->amp * cs->freq * cs->freq * std::cos(arg);
  } else {
    const auto& poly = std::get<PolynomialProfile>(p);
    // Horner for the value and both derivatives in one pass.
    double v = 0.0, d1 = 0.0, d2 = 0.0;
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
      d2 = d2 * y + 2.0 * d1;
      d1 = d1 * y + v;
      v = v * y + *it;
    }
    out.value = v;
    out.d1 = d1;
    out.d2 = d2;
  }
  return out;
}

bool is_periodic_compatible(const Profile& p, double l, double tol) {
  ProfileEval a = eval_profile(p, 0.0);
  ProfileEval b = eval_profile(p, l);
  return std::abs(a.value - b.value) <= tol && std::abs(a.d1 - b.d1) <= tol;
}

namespace {

double refine_max(const std::function<double(double)>& f, double lo, double hi) {
  // Ternary search; assumes f is unimodal on [lo, hi], which the grid scan
  // guarantees for the profile families at the default sample count.
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  return f(0.5 * (lo + hi));
}

}  // namespace

double max_on_interval(const std::function<double(double)>& f, double a, double b, int n_samples) {
  if (n_samples < 2) n_samples = 2;
  double best = f(a);
  int best_i = 0;
  for (int i = 1; i <= n_samples; ++i) {
    double y = a + (b - a) * i / n_samples;
    double v = f(y);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double lo = a + (b - a) * std::max(0, best_i - 1) / n_samples;
  double hi = a + (b - a) * std::min(n_samples, best_i + 1) / n_samples;
  double refined = refine_max(f, lo, hi);
  return refined > best ? refined : best;
}

double min_on_interval(const std::function<double(double)>& f, double a, double b, int n_samples) {
  return -max_on_interval([&](double y) { return -f(y); }, a, b, n_samples);
}

}  // namespace kornlab
