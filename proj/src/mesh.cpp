#include "kornlab/mesh.hpp"

#include <cmath>

#include "kornlab/errors.hpp"

namespace kornlab {

std::vector<int> Mesh2D::face_nodes(Face f) const {
  std::vector<int> out;
  switch (f) {
    case Face::Lower:
      for (int j = 0; j <= ny; ++j) out.push_back(node_id(0, j));
      break;
    case Face::Upper:
      for (int j = 0; j <= ny; ++j) out.push_back(node_id(nx, j));
      break;
    case Face::AxialStart:
      for (int i = 0; i <= nx; ++i) out.push_back(node_id(i, 0));
      break;
    case Face::AxialEnd:
      for (int i = 0; i <= nx; ++i) out.push_back(node_id(i, ny));
      break;
  }
  return out;
}

Mesh2D build_mesh(const ThinDomain2D& d, int nx, int ny) {
  if (nx < 1 || ny < 1) throw ConfigError("build_mesh: nx and ny must be >= 1");
  domain_metrics(d);  // rejects non-positive thickness
  Mesh2D mesh;
  mesh.domain = d;
  mesh.nx = nx;
  mesh.ny = ny;
  mesh.nodes.resize((nx + 1) * (ny + 1), 2);
  for (int j = 0; j <= ny; ++j) {
    double y = d.l * j / ny;
    double x0 = eval_profile(d.phi1, y).value;
    double x1 = eval_profile(d.phi2, y).value;
    for (int i = 0; i <= nx; ++i) {
      int id = mesh.node_id(i, j);
      mesh.nodes(id, 0) = x0 + (x1 - x0) * i / nx;
      mesh.nodes(id, 1) = y;
    }
  }
  mesh.elements.resize(nx * ny, 4);
  int e = 0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i, ++e) {
      mesh.elements(e, 0) = mesh.node_id(i, j);
      mesh.elements(e, 1) = mesh.node_id(i + 1, j);
      mesh.elements(e, 2) = mesh.node_id(i + 1, j + 1);
      mesh.elements(e, 3) = mesh.node_id(i, j + 1);
    }

  // Jacobian positivity at the 2x2 Gauss points of each element, plus the
  // aspect-ratio report.
  const double gp[2] = {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)};
  for (e = 0; e < mesh.n_elements(); ++e) {
    Eigen::Matrix<double, 4, 2> X;
    for (int k = 0; k < 4; ++k) X.row(k) = mesh.nodes.row(mesh.elements(e, k));
    for (double xi : gp)
      for (double eta : gp) {
        Eigen::Matrix<double, 4, 2> dN;
        dN << -(1 - eta), -(1 - xi), (1 - eta), -xi, eta, xi, -eta, (1 - xi);
        Eigen::Matrix2d J = X.transpose() * dN;
        if (J.determinant() <= 0.0)
          throw NonPositiveThickness("build_mesh: non-positive Jacobian in element " +
                                     std::to_string(e));
      }
    double emin = std::numeric_limits<double>::infinity(), emax = 0.0;
    for (int k = 0; k < 4; ++k) {
      double len = (X.row((k + 1) % 4) - X.row(k)).norm();
      emin = std::min(emin, len);
      emax = std::max(emax, len);
    }
    mesh.max_aspect_ratio = std::max(mesh.max_aspect_ratio, emax / emin);
  }
  return mesh;
}

Eigen::VectorXd interpolate(const Mesh2D& mesh, const AnalyticScalar& f) {
  Eigen::VectorXd c(mesh.n_nodes());
  for (int k = 0; k < mesh.n_nodes(); ++k) c(k) = f.value(mesh.nodes(k, 0), mesh.nodes(k, 1));
  return c;
}

Eigen::VectorXd interpolate_vector(const Mesh2D& mesh, const AnalyticScalar& u,
                                   const AnalyticScalar& v) {
  Eigen::VectorXd c(2 * mesh.n_nodes());
  for (int k = 0; k < mesh.n_nodes(); ++k) {
    c(2 * k) = u.value(mesh.nodes(k, 0), mesh.nodes(k, 1));
    c(2 * k + 1) = v.value(mesh.nodes(k, 0), mesh.nodes(k, 1));
  }
  return c;
}

}  // namespace kornlab
