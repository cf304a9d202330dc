#pragma once

#include <cstdint>

namespace sincivp {

// Sinc basis S(j,h)(x) = sin(pi(x/h - j)) / (pi(x/h - j)).
// The removable singularity at x = jh evaluates to 1.
double sinc_basis(int j, double h, double x);

// Sine integral Si(x) = int_0^x sin(s)/s ds.  Odd in x, Si(x) -> pi/2 as
// x -> +inf, absolute accuracy ~1e-15 over the whole real line.
double sine_integral(double x);

// Indefinite-integration basis J(j,h)(x) = h * (1/2 + Si(pi(x/h - j))/pi).
// Tends to 0 as x -> -inf and to h as x -> +inf.
double indef_basis(int j, double h, double x);

// sigma_k = 1/2 + Si(pi k)/pi, the entries of the I^(-1)_N matrix.
double sigma_weight(int k);

// Process-wide count of sine_integral evaluations.  The sine integral is the
// one non-elementary function in the Nystrom evaluators, so call counts are
// the cost metric that separates the methods.
std::uint64_t sine_integral_calls();
void reset_sine_integral_calls();

}  // namespace sincivp
