#include "sincivp/sinc_kernel.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace sincivp {

namespace {

std::atomic<std::uint64_t> g_si_calls{0};

// Maclaurin series Si(x) = sum_k (-1)^k x^(2k+1) / ((2k+1)(2k+1)!).
// Restricted to |x| <= 4 where every term stays O(1), so the alternating sum
// loses no digits; Kahan compensation keeps the accumulation error at one
// rounding of the largest term.
double si_series(double x) {
  const double x2 = x * x;
  double pow_term = x;  // x^(2k+1) / (2k+1)!
  double sum = x;
  double comp = 0.0;
  for (int k = 1; k < 48; ++k) {
    const double n = 2.0 * k + 1.0;
    pow_term *= -x2 / ((2.0 * k) * n);
    const double add = pow_term / n;
    const double y = add - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(add) < 0x1p-60 * std::abs(sum)) break;
  }
  return sum;
}

// Auxiliary functions of the asymptotic representation
//   Si(x) = pi/2 - f(x) cos(x) - g(x) sin(x),   x > 0.
// With w = e^{ix} E1(ix) one has f = -Im w and g = Re w, and w equals the
// classical continued fraction of the exponential integral,
//   w = 1/(z+1- 1^2/(z+3- 2^2/(z+5- ...))),  z = ix,
// evaluated here with the modified Lentz algorithm.  Converges to machine
// precision for x >= 4 in a few dozen iterations.
void si_aux(double x, double& f, double& g) {
  using cplx = std::complex<double>;
  const cplx z(0.0, x);
  cplx b = z + 1.0;
  cplx c = cplx(1e300, 0.0);
  cplx d = 1.0 / b;
  cplx w = d;
  for (int k = 2; k <= 500; ++k) {
    const double a = -double(k - 1) * double(k - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    w *= del;
    if (std::abs(del - cplx(1.0, 0.0)) < 4e-16) {
      f = -w.imag();
      g = w.real();
      return;
    }
  }
  throw std::runtime_error(
      "sine_integral: continued fraction did not converge");
}

}  // namespace

double sinc_basis(int j, double h, double x) {
  if (!(h > 0.0)) throw std::invalid_argument("sinc_basis: h must be positive");
  const double u = std::numbers::pi * (x / h - j);
  if (std::abs(u) < 1e-4) {
    // truncated Taylor series of sin(u)/u; u^6 term is below 1e-28 here
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  }
  return std::sin(u) / u;
}

double sine_integral(double x) {
  g_si_calls.fetch_add(1, std::memory_order_relaxed);
  if (x == 0.0) return 0.0;
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  double v;
  if (ax <= 4.0) {
    v = si_series(ax);
  } else if (std::isinf(ax)) {
    v = std::numbers::pi / 2;
  } else {
    double f, g;
    si_aux(ax, f, g);
    v = std::numbers::pi / 2 - f * std::cos(ax) - g * std::sin(ax);
  }
  return std::copysign(v, x);
}

double indef_basis(int j, double h, double x) {
  if (!(h > 0.0)) throw std::invalid_argument("indef_basis: h must be positive");
  const double u = std::numbers::pi * (x / h - j);
  return h * (0.5 + sine_integral(u) / std::numbers::pi);
}

double sigma_weight(int k) {
  return 0.5 + sine_integral(std::numbers::pi * k) / std::numbers::pi;
}

std::uint64_t sine_integral_calls() {
  return g_si_calls.load(std::memory_order_relaxed);
}

void reset_sine_integral_calls() {
  g_si_calls.store(0, std::memory_order_relaxed);
}

}  // namespace sincivp
