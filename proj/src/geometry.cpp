#include "kornlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>

#include "kornlab/errors.hpp"

namespace kornlab {

DomainMetrics domain_metrics(const ThinDomain2D& d, int n_samples) {
  auto thickness = [&](double y) {
    return eval_profile(d.phi2, y).value - eval_profile(d.phi1, y).value;
  };
  DomainMetrics m;
  m.h = min_on_interval(thickness, 0.0, d.l, n_samples);
  m.H = max_on_interval(thickness, 0.0, d.l, n_samples);
  if (m.h <= 0.0)
    throw NonPositiveThickness("domain_metrics: inf(phi2 - phi1) = " + std::to_string(m.h));
  m.m = m.H / m.h;
  m.rho1 = max_on_interval([&](double y) { return std::abs(eval_profile(d.phi1, y).d1); }, 0.0,
                           d.l, n_samples);
  m.rho2 = max_on_interval([&](double y) { return std::abs(eval_profile(d.phi2, y).d1); }, 0.0,
                           d.l, n_samples);
  m.rho1_dd = max_on_interval([&](double y) { return std::abs(eval_profile(d.phi1, y).d2); }, 0.0,
                              d.l, n_samples);
  return m;
}

Gamma1Polyline::Gamma1Polyline(const ThinDomain2D& d, const BoundarySelector& gamma1,
                               int resolution) {
  if (gamma1.empty()) throw EmptySelector("distance_to_gamma1: selector holds no faces");
  if (resolution < 1) resolution = 1;
  auto is_straight = [](const Profile& p) {
    return std::holds_alternative<ConstantProfile>(p) || std::holds_alternative<AffineProfile>(p);
  };
  auto add_profile_face = [&](const Profile& p) {
    // Straight faces are represented exactly by a single segment.
    int segs = is_straight(p) ? 1 : resolution;
    for (int i = 0; i < segs; ++i) {
      double y0 = d.l * i / segs;
      double y1 = d.l * (i + 1) / segs;
      a_.emplace_back(eval_profile(p, y0).value, y0);
      b_.emplace_back(eval_profile(p, y1).value, y1);
    }
  };
  auto add_axial_face = [&](double y) {
    double x0 = eval_profile(d.phi1, y).value;
    double x1 = eval_profile(d.phi2, y).value;
    a_.emplace_back(x0, y);
    b_.emplace_back(x1, y);
  };
  if (gamma1.contains(Face::Lower)) add_profile_face(d.phi1);
  if (gamma1.contains(Face::Upper)) add_profile_face(d.phi2);
  if (gamma1.contains(Face::AxialStart)) add_axial_face(0.0);
  if (gamma1.contains(Face::AxialEnd)) add_axial_face(d.l);
}

double Gamma1Polyline::distance(const Eigen::Vector2d& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < a_.size(); ++i) {
    Eigen::Vector2d ab = b_[i] - a_[i];
    double len2 = ab.squaredNorm();
    double t = len2 > 0.0 ? (p - a_[i]).dot(ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double d2 = (p - (a_[i] + t * ab)).squaredNorm();
    if (d2 < best) best = d2;
  }
  return std::sqrt(best);
}

double distance_to_gamma1(const ThinDomain2D& d, const BoundarySelector& gamma1,
                          const Eigen::Vector2d& p, int resolution) {
  return Gamma1Polyline(d, gamma1, resolution).distance(p);
}

}  // namespace kornlab
