#include "sincivp/transform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sincivp {

namespace {

constexpr double kPi = std::numbers::pi;
// Floor for offsets and derivative weights: quantities that are positive in
// exact arithmetic but underflow in double for extreme grids are clamped
// here instead of collapsing to zero.
constexpr double kTinyPositive = std::numeric_limits<double>::min();

void check_interval(const Interval& iv, const char* who) {
  if (!(iv.a < iv.b) || !std::isfinite(iv.a) || !std::isfinite(iv.b))
    throw std::invalid_argument(std::string(who) +
                                ": interval must satisfy a < b, both finite");
}

void check_finite(double x, const char* who) {
  if (!std::isfinite(x))
    throw std::invalid_argument(std::string(who) + ": x must be finite");
}

// 1/(1+e^{-w}) with full relative precision on both tails.
double logistic(double w) {
  if (w >= 0.0) return 1.0 / (1.0 + std::exp(-w));
  const double e = std::exp(w);
  return e / (1.0 + e);
}

// Offsets from the logistic split of the interval; w is the argument of the
// tanh doubled (t - a = (b-a)/(1+e^{-w})).  Computed from |w| so that the
// j <-> -j node symmetry is exact, and clamped away from zero.
NodePoint offsets_from(double w, const Interval& iv) {
  NodePoint p;
  const double len = iv.b - iv.a;
  if (w == 0.0) {
    p.off_a = p.off_b = 0.5 * len;
    p.t = iv.a + 0.5 * len;
    return p;
  }
  const double near = len * logistic(std::abs(w));   // larger offset
  const double far0 = len * logistic(-std::abs(w));  // smaller offset
  const double far = far0 > kTinyPositive ? far0 : kTinyPositive;
  if (w < 0.0) {
    p.off_a = far;
    p.off_b = near;
    p.t = iv.a + far;
  } else {
    p.off_a = near;
    p.off_b = far;
    p.t = iv.b - far;
  }
  return p;
}

}  // namespace

NodePoint se_forward(double x, const Interval& iv) {
  check_interval(iv, "se_forward");
  check_finite(x, "se_forward");
  return offsets_from(x, iv);
}

NodePoint de_forward(double x, const Interval& iv) {
  check_interval(iv, "de_forward");
  check_finite(x, "de_forward");
  const double w = kPi * std::sinh(x);
  if (!std::isfinite(w))
    throw std::invalid_argument(
        "de_forward: pi*sinh(x) overflows at x = " + std::to_string(x));
  return offsets_from(w, iv);
}

double inverse_from_offsets(TransformKind kind, double off_a, double off_b) {
  if (!(off_a > 0.0) || !(off_b > 0.0))
    throw std::domain_error(
        "inverse_from_offsets: t must lie strictly inside (a, b)");
  const double r = std::log(off_a) - std::log(off_b);  // log((t-a)/(b-t))
  if (kind == TransformKind::SE) return r;
  return std::asinh(r / kPi);
}

double se_inverse(double t, const Interval& iv) {
  check_interval(iv, "se_inverse");
  if (!(t > iv.a) || !(t < iv.b))
    throw std::domain_error("se_inverse: t must lie strictly inside (a, b)");
  return inverse_from_offsets(TransformKind::SE, t - iv.a, iv.b - t);
}

double de_inverse(double t, const Interval& iv) {
  check_interval(iv, "de_inverse");
  if (!(t > iv.a) || !(t < iv.b))
    throw std::domain_error("de_inverse: t must lie strictly inside (a, b)");
  return inverse_from_offsets(TransformKind::DE, t - iv.a, iv.b - t);
}

double se_derivative(double x, const Interval& iv) {
  check_interval(iv, "se_derivative");
  check_finite(x, "se_derivative");
  // (b-a)/(4 cosh^2(x/2)) = (b-a) e^{-|x|} / (1+e^{-|x|})^2
  const double e = std::exp(-std::abs(x));
  const double v = (iv.b - iv.a) * e / ((1.0 + e) * (1.0 + e));
  return v > kTinyPositive ? v : kTinyPositive;
}

double de_derivative(double x, const Interval& iv) {
  check_interval(iv, "de_derivative");
  check_finite(x, "de_derivative");
  // (b-a) pi cosh(x) / (4 cosh^2((pi/2) sinh x)), written with exponentials:
  // 1/(4 cosh^2 u) = q/(1+q)^2 with q = e^{-2|u|}, so cosh^2 never overflows.
  const double ax = std::abs(x);
  const double q = std::exp(-kPi * std::sinh(ax));
  const double v =
      (iv.b - iv.a) * kPi * std::cosh(ax) * q / ((1.0 + q) * (1.0 + q));
  return v > kTinyPositive ? v : kTinyPositive;
}

NodePoint transform_forward(TransformKind kind, double x, const Interval& iv) {
  return kind == TransformKind::SE ? se_forward(x, iv) : de_forward(x, iv);
}

double transform_derivative(TransformKind kind, double x, const Interval& iv) {
  return kind == TransformKind::SE ? se_derivative(x, iv)
                                   : de_derivative(x, iv);
}

double step_size(TransformKind kind, const RegularityParams& params, int N) {
  if (N < 1) throw std::invalid_argument("step_size: N must be positive");
  if (!(params.alpha > 0.0) || !(params.alpha <= 1.0))
    throw std::invalid_argument("step_size: alpha must lie in (0, 1]");
  const double d_bound = kind == TransformKind::SE ? kPi : kPi / 2;
  if (!(params.d > 0.0) || params.d > d_bound)
    throw std::invalid_argument(
        "step_size: d must lie in (0, " + std::to_string(d_bound) + "] for " +
        (kind == TransformKind::SE ? "SE" : "DE"));
  if (kind == TransformKind::SE)
    return std::sqrt(kPi * params.d / (params.alpha * N));
  const double arg = 2.0 * params.d * N / params.alpha;
  if (!(arg > 1.0))
    throw std::invalid_argument(
        "step_size: N too small for given d, alpha (need 2dN/alpha > 1)");
  return std::log(arg) / N;
}

SincGrid build_grid_with_h(TransformKind kind, const Interval& iv,
                           const RegularityParams& params, int N, double h) {
  check_interval(iv, "build_grid");
  if (N < 0) throw std::invalid_argument("build_grid: N must be >= 0");
  if (!(h > 0.0)) throw std::invalid_argument("build_grid: h must be positive");
  SincGrid grid;
  grid.kind = kind;
  grid.interval = iv;
  grid.params = params;
  grid.N = N;
  grid.h = h;
  grid.nodes.reserve(static_cast<size_t>(2 * N + 1));
  grid.dweights.reserve(static_cast<size_t>(2 * N + 1));
  for (int j = -N; j <= N; ++j) {
    const double x = j * h;
    grid.nodes.push_back(transform_forward(kind, x, iv));
    grid.dweights.push_back(transform_derivative(kind, x, iv));
  }
  return grid;
}

SincGrid build_grid(TransformKind kind, const Interval& iv,
                    const RegularityParams& params, int N) {
  return build_grid_with_h(kind, iv, params, N, step_size(kind, params, N));
}

}  // namespace sincivp
