#include "kornlab/forms.hpp"

#include <cmath>

#include "kornlab/errors.hpp"
#include "kornlab/parallel.hpp"
#include "kornlab/quadrature.hpp"

namespace kornlab {

FormKind form_kind_from_string(const std::string& tag) {
  if (tag == "mass_scalar") return FormKind::MassScalar;
  if (tag == "mass_u_component") return FormKind::MassUComponent;
  if (tag == "grad_scalar") return FormKind::GradScalar;
  if (tag == "grad_vector") return FormKind::GradVector;
  if (tag == "strain") return FormKind::Strain;
  if (tag == "operator_energy") return FormKind::OperatorEnergy;
  if (tag == "weighted_grad") return FormKind::WeightedGrad;
  throw UnknownDescriptor("assemble: unknown form descriptor '" + tag + "'");
}

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::MassScalar: return "mass_scalar";
    case FormKind::MassUComponent: return "mass_u_component";
    case FormKind::GradScalar: return "grad_scalar";
    case FormKind::GradVector: return "grad_vector";
    case FormKind::Strain: return "strain";
    case FormKind::OperatorEnergy: return "operator_energy";
    case FormKind::WeightedGrad: return "weighted_grad";
  }
  return "?";
}

void SymmetricForm::write_coordinate(std::ostream& os) const {
  for (int k = 0; k < A.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
      os << it.row() << " " << it.col() << " " << it.value() << "\n";
}

namespace {

struct QuadPoint {
  double xi, eta, w;
};

std::vector<QuadPoint> tensor_rule(int order) {
  QuadRule1D r = gauss_on_interval(order, 0.0, 1.0);
  std::vector<QuadPoint> pts;
  pts.reserve(static_cast<size_t>(r.size()) * r.size());
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      pts.push_back({r.points[i], r.points[j], r.weights[i] * r.weights[j]});
  return pts;
}

void shapes(double xi, double eta, Eigen::Vector4d& N, Eigen::Matrix<double, 4, 2>& dN) {
  N << (1 - xi) * (1 - eta), xi * (1 - eta), xi * eta, (1 - xi) * eta;
  dN << -(1 - eta), -(1 - xi), (1 - eta), -xi, eta, xi, -eta, (1 - xi);
}

bool is_vector_form(FormKind kind) {
  return kind == FormKind::MassUComponent || kind == FormKind::GradVector ||
         kind == FormKind::Strain;
}

}  // namespace

SymmetricForm assemble(const Mesh2D& mesh, const FormDescriptor& desc, int quad_order) {
  if (quad_order < 2 || quad_order > 4)
    throw ConfigError("assemble: quad_order must be in {2, 3, 4}");
  if (desc.kind == FormKind::OperatorEnergy && !desc.op)
    throw UnknownDescriptor("assemble: operator_energy requires an operator");
  if (desc.kind == FormKind::WeightedGrad && desc.delta == nullptr)
    throw UnknownDescriptor("assemble: weighted_grad requires a distance polyline");

  const int components = is_vector_form(desc.kind) ? 2 : 1;
  const int ldofs = 4 * components;
  const std::vector<QuadPoint> rule = tensor_rule(quad_order);

  Eigen::Matrix2d const_coeff = Eigen::Matrix2d::Zero();
  const ConstCoeffOperator* const_op = nullptr;
  const OperatorLa* la_op = nullptr;
  if (desc.op) {
    if ((const_op = std::get_if<ConstCoeffOperator>(&*desc.op))) {
      if (const_op->n() != 2) throw ConfigError("assemble: operator_energy is 2D only");
      // Only the symmetric part acts on a Hessian; using it keeps the form symmetric.
      const_coeff = 0.5 * (const_op->a + const_op->a.transpose());
    } else {
      la_op = &std::get<OperatorLa>(*desc.op);
    }
  }

  std::vector<Eigen::MatrixXd> local(static_cast<size_t>(mesh.n_elements()));
  parallel_for_index(mesh.n_elements(), [&](int e) {
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(ldofs, ldofs);
    Eigen::Matrix<double, 4, 2> X;
    for (int k = 0; k < 4; ++k) X.row(k) = mesh.nodes.row(mesh.elements(e, k));
    Eigen::Vector4d N;
    Eigen::Matrix<double, 4, 2> dN;
    for (const QuadPoint& q : rule) {
      shapes(q.xi, q.eta, N, dN);
      Eigen::Matrix2d J = X.transpose() * dN;
      double detJ = J.determinant();
      Eigen::Matrix<double, 4, 2> g = dN * J.inverse();
      double w = q.w * detJ;
      switch (desc.kind) {
        case FormKind::MassScalar:
          K.noalias() += w * (N * N.transpose());
          break;
        case FormKind::GradScalar:
          K.noalias() += w * (g * g.transpose());
          break;
        case FormKind::MassUComponent:
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) K(2 * a, 2 * b) += w * N(a) * N(b);
          break;
        case FormKind::GradVector:
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
              double v = w * g.row(a).dot(g.row(b));
              K(2 * a, 2 * b) += v;
              K(2 * a + 1, 2 * b + 1) += v;
            }
          break;
        case FormKind::Strain: {
          Eigen::Matrix<double, 3, 8> B = Eigen::Matrix<double, 3, 8>::Zero();
          for (int a = 0; a < 4; ++a) {
            B(0, 2 * a) = g(a, 0);
            B(1, 2 * a + 1) = g(a, 1);
            B(2, 2 * a) = 0.5 * g(a, 1);
            B(2, 2 * a + 1) = 0.5 * g(a, 0);
          }
          Eigen::Vector3d d(1.0, 1.0, 2.0);
          K.noalias() += w * (B.transpose() * d.asDiagonal() * B);
          break;
        }
        case FormKind::OperatorEnergy: {
          Eigen::Vector2d p = X.transpose() * N;
          Eigen::Matrix2d A = la_op ? la_coefficient_matrix(*la_op, p(1)) : const_coeff;
          K.noalias() += w * (g * A * g.transpose());
          break;
        }
        case FormKind::WeightedGrad: {
          Eigen::Vector2d p = X.transpose() * N;
          double delta = desc.delta->distance(p);
          double factor = w * std::pow(delta, desc.delta_power);
          K.noalias() += factor * (g * g.transpose());
          break;
        }
      }
    }
    // Exact symmetry regardless of the accumulation path.
    local[static_cast<size_t>(e)] = 0.5 * (K + K.transpose());
  });

  const int n = components * mesh.n_nodes();
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(mesh.n_elements()) * ldofs * ldofs);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Eigen::MatrixXd& K = local[static_cast<size_t>(e)];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int ca = 0; ca < components; ++ca)
          for (int cb = 0; cb < components; ++cb) {
            double v = K(components * a + ca, components * b + cb);
            if (v != 0.0)
              trips.emplace_back(components * mesh.elements(e, a) + ca,
                                 components * mesh.elements(e, b) + cb, v);
          }
  }
  SymmetricForm form;
  form.components = components;
  form.kind = desc.kind;
  form.A.resize(n, n);
  form.A.setFromTriplets(trips.begin(), trips.end());
  return form;
}

SymmetricForm assemble(const Mesh2D& mesh, FormKind kind, int quad_order) {
  FormDescriptor desc;
  desc.kind = kind;
  return assemble(mesh, desc, quad_order);
}

ScalarMoments scalar_field_moments(const Mesh2D& mesh, const Eigen::VectorXd& nodal,
                                   int quad_order) {
  if (nodal.size() != mesh.n_nodes())
    throw ConfigError("scalar_field_moments: field length does not match node count");
  const std::vector<QuadPoint> rule = tensor_rule(quad_order);
  ScalarMoments m;
  Eigen::Vector4d N;
  Eigen::Matrix<double, 4, 2> dN;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    Eigen::Matrix<double, 4, 2> X;
    Eigen::Vector4d c;
    for (int k = 0; k < 4; ++k) {
      X.row(k) = mesh.nodes.row(mesh.elements(e, k));
      c(k) = nodal(mesh.elements(e, k));
    }
    for (const QuadPoint& q : rule) {
      shapes(q.xi, q.eta, N, dN);
      Eigen::Matrix2d J = X.transpose() * dN;
      double detJ = J.determinant();
      Eigen::Matrix<double, 4, 2> g = dN * J.inverse();
      double w = q.w * detJ;
      double u = N.dot(c);
      double ux = g.col(0).dot(c);
      double uy = g.col(1).dot(c);
      m.l2 += w * u * u;
      m.dx2 += w * ux * ux;
      m.dy2 += w * uy * uy;
      m.dxdy += w * ux * uy;
    }
  }
  return m;
}

double scalar_error_l2(const Mesh2D& mesh, const Eigen::VectorXd& nodal,
                       const AnalyticScalar& ref, int quad_order) {
  if (nodal.size() != mesh.n_nodes())
    throw ConfigError("scalar_error_l2: field length does not match node count");
  const std::vector<QuadPoint> rule = tensor_rule(quad_order);
  double err2 = 0.0;
  Eigen::Vector4d N;
  Eigen::Matrix<double, 4, 2> dN;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    Eigen::Matrix<double, 4, 2> X;
    Eigen::Vector4d c;
    for (int k = 0; k < 4; ++k) {
      X.row(k) = mesh.nodes.row(mesh.elements(e, k));
      c(k) = nodal(mesh.elements(e, k));
    }
    for (const QuadPoint& q : rule) {
      shapes(q.xi, q.eta, N, dN);
      Eigen::Matrix2d J = X.transpose() * dN;
      Eigen::Vector2d p = X.transpose() * N;
      double diff = N.dot(c) - ref.value(p(0), p(1));
      err2 += q.w * J.determinant() * diff * diff;
    }
  }
  return std::sqrt(err2);
}

}  // namespace kornlab
