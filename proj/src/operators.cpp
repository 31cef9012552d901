#include "kornlab/operators.hpp"

#include <cmath>

#include "kornlab/errors.hpp"

namespace kornlab {

EllipticityConstants ellipticity_constants(const ConstCoeffOperator& op) {
  const int n = op.n();
  Eigen::MatrixXd sym = 0.5 * (op.a + op.a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  EllipticityConstants out;
  out.lambda = es.eigenvalues()(0);
  // Residual guard on the returned pair; SelfAdjointEigenSolver is direct,
  // this asserts the backend did not silently degrade.
  double res = (sym * es.eigenvectors().col(0) - out.lambda * es.eigenvectors().col(0)).norm();
  if (!(res <= 1e-12 * std::max(1.0, sym.norm())))
    throw SingularSystem("ellipticity_constants: eigensolver residual " + std::to_string(res));
  out.Lambda = 0.0;
  for (int j = 0; j < n; ++j) out.Lambda = std::max(out.Lambda, op.a.col(j).cwiseAbs().sum());
  if (out.lambda <= 0.0)
    throw NotElliptic("ellipticity_constants: smallest symmetric-part eigenvalue " +
                      std::to_string(out.lambda));
  return out;
}

double lambda_a(double a) {
  double m = std::abs(a);
  return 2.0 / (2.0 + m * m + m * std::sqrt(4.0 + m * m));
}

double ShearMap::A() const {
  double best = 0.0;
  for (int i = 1; i < n(); ++i) best = std::max(best, std::abs(a(i)));
  return best;
}

ShearTransformResult shear_transform(const ConstCoeffOperator& diag_op, const ShearMap& map) {
  const int n = diag_op.n();
  if (map.n() != n)
    throw ConfigError("shear_transform: map dimension does not match operator dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && diag_op.a(i, j) != 0.0)
        throw MixedTermsPresent("shear_transform: input operator has off-diagonal entry at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");

  ShearTransformResult out;
  out.op.a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) out.op.a(i, i) = diag_op.a(i, i);
  for (int i = 1; i < n; ++i) {
    double bi = diag_op.a(i, i);
    double ai = map.a(i);
    out.op.a(0, 0) += bi * ai * ai;
    out.op.a(0, i) = -bi * ai;
    out.op.a(i, 0) = -bi * ai;
  }

  double A = map.A();
  double Lambda_in = 0.0;
  for (int i = 0; i < n; ++i) Lambda_in = std::max(Lambda_in, std::abs(diag_op.a(i, i)));
  out.lambda_claimed = n > 1 ? lambda_a(A) / (n - 1) : lambda_a(A);
  out.Lambda_claimed = Lambda_in * (1.0 + (n - 1) * (A + A * A));
  return out;
}

Profile derivative_profile(const Profile& p) {
  if (std::holds_alternative<ConstantProfile>(p)) return ConstantProfile{0.0};
  if (const auto* a = std::get_if<AffineProfile>(&p)) return ConstantProfile{a->c1};
  if (const auto* c = std::get_if<CosineProfile>(&p)) {
    // d/dy [c0 + A cos(wy + p)] = A w cos(wy + p + pi/2)
    return CosineProfile{0.0, c->amp * c->freq, c->freq, c->phase + M_PI / 2.0};
  }
  const auto& poly = std::get<PolynomialProfile>(p);
  PolynomialProfile d;
  for (size_t k = 1; k < poly.coeffs.size(); ++k)
    d.coeffs.push_back(static_cast<double>(k) * poly.coeffs[k]);
  if (d.coeffs.empty()) d.coeffs.push_back(0.0);
  return d;
}

OperatorLa make_operator_la(const Profile& a, double l) {
  OperatorLa op;
  op.a = a;
  op.l = l;
  op.M = max_on_interval([&](double y) { return std::abs(eval_profile(a, y).value); }, 0.0, l);
  op.M1 = max_on_interval([&](double y) { return std::abs(eval_profile(a, y).d1); }, 0.0, l);
  return op;
}

OperatorLa flatten_operator(const Profile& phi1, double l) {
  return make_operator_la(derivative_profile(phi1), l);
}

EllipticityConstants ellipticity_constants(const OperatorLa& op) {
  EllipticityConstants out;
  out.lambda = lambda_a(op.M);
  out.Lambda = 1.0 + op.M + op.M * op.M;
  return out;
}

Eigen::Matrix2d la_coefficient_matrix(const OperatorLa& op, double y) {
  double a = eval_profile(op.a, y).value;
  Eigen::Matrix2d m;
  m << 1.0 + a * a, -a, -a, 1.0;
  return m;
}

double apply_operator(const ConstCoeffOperator& op, const Jet2& f) {
  if (op.n() != 2) throw ConfigError("apply_operator: PDE-side evaluation is 2D only");
  return op.a(0, 0) * f.H(0, 0) + op.a(0, 1) * f.H(0, 1) + op.a(1, 0) * f.H(1, 0) +
         op.a(1, 1) * f.H(1, 1);
}

double apply_operator(const OperatorLa& op, const Jet2& f, double y) {
  ProfileEval a = eval_profile(op.a, y);
  return (1.0 + a.value * a.value) * f.H(0, 0) - 2.0 * a.value * f.H(0, 1) + f.H(1, 1) -
         a.d1 * f.g(0);
}

}  // namespace kornlab
