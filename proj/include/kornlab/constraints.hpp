#pragma once

#include <Eigen/Sparse>
#include <vector>

#include "kornlab/mesh.hpp"

namespace kornlab {

// Which vector components a constraint touches. For scalar spaces use U
// (the only component).
enum class ComponentMask { U, V, Both };

struct DirichletZero {
  BoundarySelector faces;
  ComponentMask comp = ComponentMask::Both;
};

struct PeriodicAxial {
  ComponentMask comp = ComponentMask::U;
};

struct DeflateConstants {
  ComponentMask comp = ComponentMask::Both;
};

struct ConstraintSet {
  std::vector<DirichletZero> dirichlet;
  std::vector<PeriodicAxial> periodic;
  std::vector<DeflateConstants> deflate;
};

// Reduced dof space: full coefficients are P * reduced. Dirichlet drops
// columns, periodic identification merges the axial-end dof into its
// axial-start partner. Constant modes to be deflated are kept in the space
// and handed to the eigensolver as constraint vectors (reduced coordinates).
struct ConstrainedSystem {
  Eigen::SparseMatrix<double> P;
  std::vector<Eigen::VectorXd> deflation;
  int full_size = 0;
  int reduced_size = 0;

  Eigen::VectorXd expand(const Eigen::VectorXd& reduced) const { return P * reduced; }
  Eigen::SparseMatrix<double> reduce(const Eigen::SparseMatrix<double>& A) const {
    return Eigen::SparseMatrix<double>(P.transpose() * A * P);
  }
};

// components: 1 for scalar fields, 2 for displacement fields.
// Throws PeriodicIncompatibleProfiles when periodic pairing is requested on a
// domain whose profiles differ at y=0 and y=l.
ConstrainedSystem constrain(const Mesh2D& mesh, int components, const ConstraintSet& bc);

}  // namespace kornlab
