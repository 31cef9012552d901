#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kornlab/analytic.hpp"
#include "kornlab/geometry.hpp"

namespace kornlab {

// Mapped tensor-product mesh of bilinear quadrilaterals. Node (i, j) sits at
// x = phi1(y_j) + (i/nx) * (phi2(y_j) - phi1(y_j)), y_j = l * j / ny, so
// boundary nodes lie exactly on the profiles. Elements are straight-sided;
// anisotropy is reported, not capped.
struct Mesh2D {
  ThinDomain2D domain;
  int nx = 1;
  int ny = 1;
  Eigen::MatrixX2d nodes;
  Eigen::MatrixX4i elements;  // corners CCW: (i,j), (i+1,j), (i+1,j+1), (i,j+1)
  double max_aspect_ratio = 1.0;

  int n_nodes() const { return static_cast<int>(nodes.rows()); }
  int n_elements() const { return static_cast<int>(elements.rows()); }
  int node_id(int i, int j) const { return j * (nx + 1) + i; }

  std::vector<int> face_nodes(Face f) const;
};

// Throws NonPositiveThickness via domain_metrics; validates element Jacobians.
Mesh2D build_mesh(const ThinDomain2D& d, int nx, int ny);

// Nodal interpolation.
Eigen::VectorXd interpolate(const Mesh2D& mesh, const AnalyticScalar& f);
Eigen::VectorXd interpolate_vector(const Mesh2D& mesh, const AnalyticScalar& u,
                                   const AnalyticScalar& v);

}  // namespace kornlab
