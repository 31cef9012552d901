#pragma once

#include <cstdint>
#include <vector>

#include "kornlab/checks.hpp"

namespace kornlab {

// Randomized scenario suites behind `verify hardy|lemma21|lemma22|thm13`.
// Case i draws everything from Rng(seed ^ i), so a suite is reproducible
// per case and insensitive to the worker count.
struct SuiteOptions {
  int cases = 100;
  std::uint64_t seed = 1234;
  // Interval split for the Hardy suite. Negative means "draw per case";
  // a fixed value is validated against (0, 1] up front (BadInterval).
  double eps = -1.0;
  // 0 means "use the check's own default".
  int quad_n = 0;
};

// Interval inequality on random trig polynomials over random [a, b].
std::vector<InequalityReport> hardy_suite(const SuiteOptions& opt);

// Weighted gradient bound on rectangles with random symmetric-positive
// operators (plus a small antisymmetric part) and random cutoff fields.
// Boundary selectors are drawn from the four kink-aligned choices.
std::vector<InequalityReport> lemma21_suite(const SuiteOptions& opt);

// Same bound for the flattening operator family: random bounded-slope cosine
// coefficient profiles, fields vanishing on the axial faces so the
// compatibility integral is identically zero.
std::vector<InequalityReport> lemma22_suite(const SuiteOptions& opt);

// Compatibility-integral cancellation on axially symmetric periodic domains
// with periodic data: reports |integral| against 1e-10 times the field scale.
std::vector<InequalityReport> periodic_boundary_suite(const SuiteOptions& opt);

// Shear-to-hyperplane coefficient claims: random diagonal operators with
// entries in [1, 3] (the claimed lower bound assumes unit-normalized
// ellipticity) and random shear maps, n in [2, 6]. holds means
//   computed lambda >= claimed - 1e-12  and  computed Lambda <= claimed + 1e-12.
std::vector<InequalityReport> shear_claims_suite(const SuiteOptions& opt);

}  // namespace kornlab
