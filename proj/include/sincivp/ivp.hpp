#pragma once

#include <functional>
#include <string>

#include "sincivp/linalg.hpp"
#include "sincivp/transform.hpp"

namespace sincivp {

// Linear initial value problem y'(t) = K(t) y(t) + g(t), y(a) = r, on a
// finite interval.  The evaluators receive the full NodePoint so kernels
// with endpoint singularities (1/sqrt(t), arctanh t at +-1, ...) can use the
// cancellation-free offsets instead of t itself.
struct IvpProblem {
  int n = 0;
  std::function<DenseMatrix(const NodePoint&)> coeff;    // K(t), n x n
  std::function<Vector(const NodePoint&)> forcing;       // g(t), length n
  Vector init;                                           // r
  Interval interval;
};

void validate(const IvpProblem& prob);

// A problem bundled with its exact solution and the (alpha, d) pairs under
// which the SE and DE regularity conditions hold.
struct ExampleProblem {
  std::string name;
  IvpProblem problem;
  std::function<Vector(double)> exact;
  RegularityParams se_params;
  RegularityParams de_params;
};

// The Halm equation (1+t^2)^2 y'' = 2y on [0,1] reduced to first order;
// exact y1 = sqrt(1+t^2) sinh(arctan t).
ExampleProblem example_halm();

// System on [0,2] with a 1/sqrt(t) singularity at the origin;
// exact y1 = sqrt(t) e^{-t}, y2 = e^{-t}.
ExampleProblem example_singular();

// System on [-1,1] whose coefficients have non-regular points densely
// distributed around both endpoints; exact y1 = sin((1-t^2)F(t)),
// y2 = cos((1-t^2)F(t)) with F(t) = sqrt(cos(4 arctanh t) + cosh pi).
ExampleProblem example_dense_singularities();

// Sanity problem y' = y, y(0) = 1 on [0,1].
ExampleProblem example_exponential();

// Lookup by CLI id: "1", "2", "3" or "exp".
ExampleProblem example_by_id(const std::string& id);

}  // namespace sincivp
