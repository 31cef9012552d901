#include "kornlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace kornlab {

QuadRule1D gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  const int n = order;
  QuadRule1D rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P_n'(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = -x;
    rule.weights[i] = w;
    rule.points[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;
  return rule;
}

QuadRule1D gauss_on_interval(int order, double a, double b) {
  QuadRule1D base = gauss_legendre(order);
  QuadRule1D rule;
  rule.points.resize(base.size());
  rule.weights.resize(base.size());
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < base.size(); ++i) {
    rule.points[i] = mid + half * base.points[i];
    rule.weights[i] = half * base.weights[i];
  }
  return rule;
}

QuadRule1D composite_gauss(int n_points, double a, double b) {
  if (n_points < 1) throw std::invalid_argument("composite_gauss: n_points must be >= 1");
  const int order = 8;
  int panels = (n_points + order - 1) / order;
  if (panels % 2 == 1) ++panels;
  if (panels < 2) panels = 2;
  QuadRule1D rule;
  rule.points.reserve(static_cast<size_t>(panels) * order);
  rule.weights.reserve(static_cast<size_t>(panels) * order);
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    QuadRule1D panel = gauss_on_interval(order, a + p * width, a + (p + 1) * width);
    rule.points.insert(rule.points.end(), panel.points.begin(), panel.points.end());
    rule.weights.insert(rule.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return rule;
}

}  // namespace kornlab
