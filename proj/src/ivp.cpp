#include "sincivp/ivp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sincivp {

namespace {

// All reproduced experiments fix pi_- (an arbitrary positive number below
// pi) to exactly 3.14.
constexpr double kPiMinus = 3.14;

DenseMatrix mat2(double a11, double a12, double a21, double a22) {
  DenseMatrix K(2, 2);
  K(0, 0) = a11;
  K(0, 1) = a12;
  K(1, 0) = a21;
  K(1, 1) = a22;
  return K;
}

Vector zero_forcing2(const NodePoint&) { return Vector{0.0, 0.0}; }

}  // namespace

void validate(const IvpProblem& prob) {
  if (prob.n < 1) throw std::invalid_argument("IvpProblem: n must be positive");
  if (!prob.coeff || !prob.forcing)
    throw std::invalid_argument("IvpProblem: coeff and forcing must be set");
  if (prob.init.size() != static_cast<size_t>(prob.n))
    throw std::invalid_argument("IvpProblem: init must have length n");
  if (!(prob.interval.a < prob.interval.b) || !std::isfinite(prob.interval.a) ||
      !std::isfinite(prob.interval.b))
    throw std::invalid_argument("IvpProblem: interval must satisfy a < b");
}

ExampleProblem example_halm() {
  ExampleProblem ex;
  ex.name = "halm";
  ex.problem.n = 2;
  ex.problem.interval = {0.0, 1.0};
  ex.problem.init = {0.0, 1.0};
  ex.problem.coeff = [](const NodePoint& p) {
    const double w = 1.0 + p.t * p.t;
    return mat2(0.0, 1.0, 2.0 / (w * w), 0.0);
  };
  ex.problem.forcing = zero_forcing2;
  ex.exact = [](double t) {
    const double u = std::atan(t);
    const double s = std::sqrt(1.0 + t * t);
    return Vector{s * std::sinh(u), (t * std::sinh(u) + std::cosh(u)) / s};
  };
  ex.se_params = {1.0, 3.0 * kPiMinus / 4.0};
  // DE strip width d_- from the closed-form chain p, q, x, y.
  const double p = kPiMinus / (2.0 * std::log(2.0));
  const double q = std::sqrt(
      (1.0 + 7.0 * p * p +
       std::sqrt((1.0 + 7.0 * p * p) * (1.0 + 7.0 * p * p) + 36.0 * p * p)) /
      2.0);
  const double x = -(1.0 - q) / (4.0 * p);
  const double y = 3.0 * (1.0 - 1.0 / q) / 4.0;
  ex.de_params = {1.0, std::asin(y / std::sqrt(x * x + y * y))};
  return ex;
}

ExampleProblem example_singular() {
  ExampleProblem ex;
  ex.name = "singular";
  ex.problem.n = 2;
  ex.problem.interval = {0.0, 2.0};
  ex.problem.init = {0.0, 1.0};
  // 1/sqrt(t) through the endpoint offset: a = 0, so sqrt(t) = sqrt(off_a)
  // stays meaningful on nodes clustered double-exponentially close to 0.
  ex.problem.coeff = [](const NodePoint& p) {
    const double rt = std::sqrt(p.off_a);
    return mat2(-1.0, 0.5 / rt, -1.0 / rt, 0.0);
  };
  ex.problem.forcing = zero_forcing2;
  ex.exact = [](double t) {
    const double e = std::exp(-t);
    return Vector{std::sqrt(t) * e, e};
  };
  ex.se_params = {0.5, kPiMinus};
  ex.de_params = {0.5, kPiMinus / 2.0};
  return ex;
}

ExampleProblem example_dense_singularities() {
  ExampleProblem ex;
  ex.name = "dense-singularities";
  ex.problem.n = 2;
  ex.problem.interval = {-1.0, 1.0};
  ex.problem.init = {0.0, 1.0};
  ex.problem.coeff = [](const NodePoint& p) {
    // arctanh t = (1/2) log((1+t)/(1-t)) = (1/2) log(off_a/off_b) on [-1,1]
    const double v = 0.5 * (std::log(p.off_a) - std::log(p.off_b));
    const double F2 = std::cos(4.0 * v) + std::cosh(std::numbers::pi);
    const double F = std::sqrt(F2);
    const double phi = 2.0 * (p.t * F2 + std::sin(4.0 * v)) / F;
    return mat2(0.0, -phi, phi, 0.0);
  };
  ex.problem.forcing = zero_forcing2;
  ex.exact = [](double t) {
    const double w = 1.0 - t * t;
    if (w == 0.0) return Vector{0.0, 1.0};  // (1-t^2)F(t) -> 0, F bounded
    const double F = std::sqrt(std::cos(4.0 * std::atanh(t)) +
                               std::cosh(std::numbers::pi));
    return Vector{std::sin(w * F), std::cos(w * F)};
  };
  ex.se_params = {1.0, kPiMinus / 2.0};
  // The DE conditions fail for every d > 0 here; d = arcsin(d_SE/pi) still
  // recovers the SE rate empirically.
  ex.de_params = {1.0, std::asin(ex.se_params.d / std::numbers::pi)};
  return ex;
}

ExampleProblem example_exponential() {
  ExampleProblem ex;
  ex.name = "exp";
  ex.problem.n = 1;
  ex.problem.interval = {0.0, 1.0};
  ex.problem.init = {1.0};
  ex.problem.coeff = [](const NodePoint&) { return DenseMatrix(1, 1, 1.0); };
  ex.problem.forcing = [](const NodePoint&) { return Vector{0.0}; };
  ex.exact = [](double t) { return Vector{std::exp(t)}; };
  ex.se_params = {1.0, 3.0 * kPiMinus / 4.0};
  ex.de_params = {1.0, kPiMinus / 2.0};
  return ex;
}

ExampleProblem example_by_id(const std::string& id) {
  if (id == "1") return example_halm();
  if (id == "2") return example_singular();
  if (id == "3") return example_dense_singularities();
  if (id == "exp") return example_exponential();
  throw std::invalid_argument("unknown example id '" + id +
                              "' (expected 1, 2, 3 or exp)");
}

}  // namespace sincivp
