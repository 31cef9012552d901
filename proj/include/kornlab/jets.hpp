#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace kornlab {

// Second-order forward-mode jet: value, gradient and Hessian of a scalar
// expression in N variables. All arithmetic below propagates derivatives
// exactly (up to roundoff), which is what the inequality checkers rely on
// instead of finite differences.
template <typename T, int N>
struct Jet {
  using Vec = Eigen::Matrix<T, N, 1>;
  using Mat = Eigen::Matrix<T, N, N>;

  T f = T(0);
  Vec g = Vec::Zero();
  Mat H = Mat::Zero();

  Jet() = default;
  explicit Jet(T value) : f(value) {}

  static Jet constant(T value) { return Jet(value); }

  static Jet variable(int axis, T value) {
    Jet j(value);
    j.g[axis] = T(1);
    return j;
  }
};

template <typename T, int N>
Jet<T, N> operator+(const Jet<T, N>& a, const Jet<T, N>& b) {
  Jet<T, N> r;
  r.f = a.f + b.f;
  r.g = a.g + b.g;
  r.H = a.H + b.H;
  return r;
}

template <typename T, int N>
Jet<T, N> operator-(const Jet<T, N>& a, const Jet<T, N>& b) {
  Jet<T, N> r;
  r.f = a.f - b.f;
  r.g = a.g - b.g;
  r.H = a.H - b.H;
  return r;
}

template <typename T, int N>
Jet<T, N> operator-(const Jet<T, N>& a) {
  Jet<T, N> r;
  r.f = -a.f;
  r.g = -a.g;
  r.H = -a.H;
  return r;
}

template <typename T, int N>
Jet<T, N> operator*(const Jet<T, N>& a, const Jet<T, N>& b) {
  Jet<T, N> r;
  r.f = a.f * b.f;
  r.g = a.g * b.f + b.g * a.f;
  r.H = a.H * b.f + b.H * a.f + a.g * b.g.transpose() + b.g * a.g.transpose();
  return r;
}

template <typename T, int N>
Jet<T, N> operator*(T s, const Jet<T, N>& a) {
  Jet<T, N> r;
  r.f = s * a.f;
  r.g = s * a.g;
  r.H = s * a.H;
  return r;
}

template <typename T, int N>
Jet<T, N> operator*(const Jet<T, N>& a, T s) {
  return s * a;
}

template <typename T, int N>
Jet<T, N> operator+(const Jet<T, N>& a, T s) {
  Jet<T, N> r = a;
  r.f += s;
  return r;
}

template <typename T, int N>
Jet<T, N> operator+(T s, const Jet<T, N>& a) {
  return a + s;
}

template <typename T, int N>
Jet<T, N> operator-(const Jet<T, N>& a, T s) {
  return a + (-s);
}

template <typename T, int N>
Jet<T, N> operator-(T s, const Jet<T, N>& a) {
  return (-a) + s;
}

// y = fn(u) with fn's value and first two derivatives at u.f supplied.
template <typename T, int N>
Jet<T, N> apply_unary(const Jet<T, N>& u, T value, T d1, T d2) {
  Jet<T, N> r;
  r.f = value;
  r.g = d1 * u.g;
  r.H = d2 * (u.g * u.g.transpose()) + d1 * u.H;
  return r;
}

template <typename T, int N>
Jet<T, N> sin(const Jet<T, N>& u) {
  T s = std::sin(u.f), c = std::cos(u.f);
  return apply_unary(u, s, c, -s);
}

template <typename T, int N>
Jet<T, N> cos(const Jet<T, N>& u) {
  T s = std::sin(u.f), c = std::cos(u.f);
  return apply_unary(u, c, -s, -c);
}

template <typename T, int N>
Jet<T, N> sinh(const Jet<T, N>& u) {
  T s = std::sinh(u.f), c = std::cosh(u.f);
  return apply_unary(u, s, c, s);
}

template <typename T, int N>
Jet<T, N> cosh(const Jet<T, N>& u) {
  T s = std::sinh(u.f), c = std::cosh(u.f);
  return apply_unary(u, c, s, c);
}

template <typename T, int N>
Jet<T, N> exp(const Jet<T, N>& u) {
  T e = std::exp(u.f);
  return apply_unary(u, e, e, e);
}

template <typename T, int N>
Jet<T, N> reciprocal(const Jet<T, N>& u) {
  T inv = T(1) / u.f;
  return apply_unary(u, inv, -inv * inv, T(2) * inv * inv * inv);
}

template <typename T, int N>
Jet<T, N> operator/(const Jet<T, N>& a, const Jet<T, N>& b) {
  return a * reciprocal(b);
}

template <typename T, int N>
Jet<T, N> pow_int(const Jet<T, N>& u, int k) {
  Jet<T, N> r = Jet<T, N>::constant(T(1));
  for (int i = 0; i < k; ++i) r = r * u;
  return r;
}

using Jet1 = Jet<double, 1>;
using Jet2 = Jet<double, 2>;

}  // namespace kornlab
