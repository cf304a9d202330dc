#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sincivp/ivp.hpp"
#include "sincivp/solver.hpp"

namespace sincivp {

enum class MethodId { SeNystrom, SeCollocation, DeNystrom, DeCollocation };

inline constexpr std::array<MethodId, 4> kAllMethods = {
    MethodId::SeNystrom, MethodId::SeCollocation, MethodId::DeNystrom,
    MethodId::DeCollocation};

const char* method_name(MethodId m);  // "se-nystrom", "de-collocation", ...
bool parse_method(std::string_view name, MethodId& out);
TransformKind method_kind(MethodId m);
bool method_is_collocation(MethodId m);

using VectorFn = std::function<Vector(double)>;

// Largest componentwise |approx - exact| over `points` equispaced interior
// samples t_l = a + l (b-a)/(points+1), l = 1..points.
double max_error(const VectorFn& approx, const VectorFn& exact,
                 const Interval& iv, int points = 999);

struct ConvergenceRecord {
  MethodId method = MethodId::SeNystrom;
  int N = 0;
  double h = 0.0;
  double max_error = 0.0;  // NaN when the cell failed
  double solve_time_s = 0.0;
  double eval_time_s = 0.0;
  bool ok = true;
  std::string error;  // failure description when !ok
};

using ConvergenceReport = std::vector<ConvergenceRecord>;

// One record per (method, N), methods outer.  A failing cell is recorded
// rather than aborting the sweep.  jobs > 1 runs cells on that many threads;
// jobs == 1 is sequential and bitwise reproducible.
ConvergenceReport convergence_sweep(const ExampleProblem& ex,
                                    const std::vector<MethodId>& methods,
                                    const std::vector<int>& N_list,
                                    int jobs = 1);

struct BenchResult {
  MethodId method = MethodId::SeNystrom;
  int N = 0;           // smallest N found with max_error <= target
  double time_s = 0.0; // wall time of solve + 999 evaluations, median of 3
  bool saturated = false;  // target unreachable within N <= max_N
};

// Doubling-then-bisection search (N = 4, 8, 16, ...) for the smallest N
// reaching the target accuracy, per method.
std::vector<BenchResult> accuracy_benchmark(const ExampleProblem& ex,
                                            double target, int max_N = 512);

// Header `method,N,h,max_error,solve_time_s,eval_time_s` plus one row per
// record, numbers in shortest round-trip decimal form.
void emit_csv(const ConvergenceReport& report, std::ostream& out);

void emit_bench_csv(const std::vector<BenchResult>& results, double target,
                    std::ostream& out);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

// Solve one (method, N) cell and wrap the evaluator; used by the sweep, the
// benchmark and the CLI.
VectorFn make_evaluator(const ExampleProblem& ex, MethodId method, int N);

}  // namespace sincivp
