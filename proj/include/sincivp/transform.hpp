#pragma once

#include <vector>

namespace sincivp {

enum class TransformKind { SE, DE };

struct Interval {
  double a = 0.0;
  double b = 1.0;
};

// Holder exponent alpha and half-width d of the strip of analyticity.
// alpha must lie in (0,1]; d must satisfy d <= pi for SE and d <= pi/2 for
// DE (values beyond the theoretical bound are rejected).
struct RegularityParams {
  double alpha = 1.0;
  double d = 1.0;
};

// A point t in [a,b] carried together with its distances to both endpoints.
// The offsets are computed in logistic form, never by subtracting from a or
// b, so the double-exponential clustering of the nodes survives down to the
// smallest positive doubles even where t itself rounds onto an endpoint.
struct NodePoint {
  double t = 0.0;
  double off_a = 0.0;  // t - a
  double off_b = 0.0;  // b - t
};

// SE transformation t = (b-a)/2 tanh(x/2) + (b+a)/2 and its inverse
// x = log((t-a)/(b-t)).
NodePoint se_forward(double x, const Interval& iv);
double se_inverse(double t, const Interval& iv);
double se_derivative(double x, const Interval& iv);

// DE transformation t = (b-a)/2 tanh((pi/2) sinh x) + (b+a)/2 and its
// inverse x = arcsinh((2/pi) arctanh((2t-b-a)/(b-a))).
NodePoint de_forward(double x, const Interval& iv);
double de_inverse(double t, const Interval& iv);
double de_derivative(double x, const Interval& iv);

NodePoint transform_forward(TransformKind kind, double x, const Interval& iv);
double transform_derivative(TransformKind kind, double x, const Interval& iv);

// x = phi(t) recovered from the endpoint offsets.  Exact even for points
// whose t has rounded onto an endpoint, unlike the plain-t inverses.
double inverse_from_offsets(TransformKind kind, double off_a, double off_b);

// Step size h: sqrt(pi d / (alpha N)) for SE, log(2 d N / alpha) / N for DE.
double step_size(TransformKind kind, const RegularityParams& params, int N);

// Collocation grid: 2N+1 nodes t_j = psi(jh) for j = -N..N together with the
// derivative weights psi'(jh).
struct SincGrid {
  TransformKind kind = TransformKind::SE;
  Interval interval;
  RegularityParams params;
  int N = 0;
  double h = 0.0;
  std::vector<NodePoint> nodes;  // index l = j + N
  std::vector<double> dweights;  // psi'(jh), all positive

  int size() const { return 2 * N + 1; }
  const NodePoint& node(int j) const { return nodes[static_cast<size_t>(j + N)]; }
  double dweight(int j) const { return dweights[static_cast<size_t>(j + N)]; }
};

SincGrid build_grid(TransformKind kind, const Interval& iv,
                    const RegularityParams& params, int N);

// Same grid with an explicitly chosen step size (h is not validated against
// the step-size rule; used by tests and special setups).
SincGrid build_grid_with_h(TransformKind kind, const Interval& iv,
                           const RegularityParams& params, int N, double h);

}  // namespace sincivp
