#pragma once

#include <vector>

namespace kornlab {

struct QuadRule1D {
  std::vector<double> points;
  std::vector<double> weights;
  int size() const { return static_cast<int>(points.size()); }
};

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
QuadRule1D gauss_legendre(int order);

// Same rule mapped to [a, b].
QuadRule1D gauss_on_interval(int order, double a, double b);

// Composite rule on [a, b]: an even number of uniform panels with a fixed
// Gauss order per panel, at least n_points total. Even panel count keeps a
// panel boundary at the interval midpoint, where distance-function kinks
// sit in the symmetric boundary-selector configurations; doubling n_points
// doubles the panel count so old panel boundaries are retained.
QuadRule1D composite_gauss(int n_points, double a, double b);

}  // namespace kornlab
