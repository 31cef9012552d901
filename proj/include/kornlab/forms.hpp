#pragma once

#include <Eigen/Sparse>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "kornlab/analytic.hpp"
#include "kornlab/mesh.hpp"
#include "kornlab/operators.hpp"

namespace kornlab {

enum class FormKind {
  MassScalar,      // int f g
  MassUComponent,  // int u_f u_g (first component of a vector field)
  GradScalar,      // int grad f . grad g
  GradVector,      // int grad U : grad V
  Strain,          // int e(U) : e(V)
  OperatorEnergy,  // int (A grad f) . grad g, A from the operator
  WeightedGrad     // int delta^p grad f . grad g
};

FormKind form_kind_from_string(const std::string& tag);  // throws UnknownDescriptor
std::string to_string(FormKind kind);

using OperatorVariant = std::variant<ConstCoeffOperator, OperatorLa>;

struct FormDescriptor {
  FormKind kind = FormKind::MassScalar;
  std::optional<OperatorVariant> op;          // required for OperatorEnergy
  const Gamma1Polyline* delta = nullptr;      // required for WeightedGrad
  int delta_power = 2;
};

// Sparse symmetric positive semidefinite bilinear form. components is 1 for
// scalar spaces, 2 for vector spaces (dofs interleaved per node: u, v).
struct SymmetricForm {
  Eigen::SparseMatrix<double> A;
  int components = 1;
  FormKind kind = FormKind::MassScalar;

  int size() const { return static_cast<int>(A.rows()); }
  double energy(const Eigen::VectorXd& c) const { return c.dot(A * c); }
  // Text dump, one "i j value" row per stored entry.
  void write_coordinate(std::ostream& os) const;
};

// Element-parallel assembly with a serial reduction in element order, so the
// result is bit-stable across thread counts.
SymmetricForm assemble(const Mesh2D& mesh, const FormDescriptor& desc, int quad_order = 3);
SymmetricForm assemble(const Mesh2D& mesh, FormKind kind, int quad_order = 3);

// Integrals of a nodal scalar field: L2, squared x/y-derivatives, and the
// cross moment int u_x u_y (used for evaluating sheared-frame gradients).
struct ScalarMoments {
  double l2 = 0.0;
  double dx2 = 0.0;
  double dy2 = 0.0;
  double dxdy = 0.0;
};
ScalarMoments scalar_field_moments(const Mesh2D& mesh, const Eigen::VectorXd& nodal,
                                   int quad_order = 3);

// L2 distance between a nodal field and a closed-form reference.
double scalar_error_l2(const Mesh2D& mesh, const Eigen::VectorXd& nodal,
                       const AnalyticScalar& ref, int quad_order = 4);

}  // namespace kornlab
