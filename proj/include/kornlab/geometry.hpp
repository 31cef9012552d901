#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

#include "kornlab/profile.hpp"

namespace kornlab {

// Thin curved domain { (x, y) : 0 < y < l, phi1(y) < x < phi2(y) }.
// The thin direction is x; y runs along the axis.
struct ThinDomain2D {
  double l = 1.0;
  Profile phi1;
  Profile phi2;
};

enum class Face { Lower, Upper, AxialStart, AxialEnd };

struct BoundarySelector {
  std::vector<Face> faces;

  BoundarySelector() = default;
  BoundarySelector(std::initializer_list<Face> fs) : faces(fs) {}

  bool contains(Face f) const {
    for (Face g : faces)
      if (g == f) return true;
    return false;
  }
  bool empty() const { return faces.empty(); }
};

struct DomainMetrics {
  double h = 0.0;       // inf thickness
  double H = 0.0;       // sup thickness
  double m = 1.0;       // H / h
  double rho1 = 0.0;    // sup |phi1'|
  double rho2 = 0.0;    // sup |phi2'|
  double rho1_dd = 0.0; // sup |phi1''|
};

// Throws NonPositiveThickness when inf(phi2 - phi1) <= 0.
DomainMetrics domain_metrics(const ThinDomain2D& d, int n_samples = 2048);

// Polyline discretization of a selected boundary subset, cached for repeated
// distance queries. Exact on straight faces at any resolution.
class Gamma1Polyline {
 public:
  // Throws EmptySelector when the selector contains no faces.
  Gamma1Polyline(const ThinDomain2D& d, const BoundarySelector& gamma1, int resolution = 512);

  double distance(const Eigen::Vector2d& p) const;

 private:
  std::vector<Eigen::Vector2d> a_;
  std::vector<Eigen::Vector2d> b_;
};

double distance_to_gamma1(const ThinDomain2D& d, const BoundarySelector& gamma1,
                          const Eigen::Vector2d& p, int resolution = 512);

}  // namespace kornlab
