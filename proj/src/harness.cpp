#include "sincivp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <ostream>
#include <thread>

namespace sincivp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const RegularityParams& params_for(const ExampleProblem& ex, MethodId m) {
  return method_kind(m) == TransformKind::SE ? ex.se_params : ex.de_params;
}

}  // namespace

const char* method_name(MethodId m) {
  switch (m) {
    case MethodId::SeNystrom: return "se-nystrom";
    case MethodId::SeCollocation: return "se-collocation";
    case MethodId::DeNystrom: return "de-nystrom";
    case MethodId::DeCollocation: return "de-collocation";
  }
  return "?";
}

bool parse_method(std::string_view name, MethodId& out) {
  for (MethodId m : kAllMethods)
    if (name == method_name(m)) {
      out = m;
      return true;
    }
  return false;
}

TransformKind method_kind(MethodId m) {
  return (m == MethodId::SeNystrom || m == MethodId::SeCollocation)
             ? TransformKind::SE
             : TransformKind::DE;
}

bool method_is_collocation(MethodId m) {
  return m == MethodId::SeCollocation || m == MethodId::DeCollocation;
}

double max_error(const VectorFn& approx, const VectorFn& exact,
                 const Interval& iv, int points) {
  if (points < 1) throw std::invalid_argument("max_error: points must be >= 1");
  double worst = 0.0;
  for (int l = 1; l <= points; ++l) {
    const double t = iv.a + l * (iv.b - iv.a) / (points + 1);
    Vector va, ve;
    try {
      va = approx(t);
      ve = exact(t);
    } catch (const std::exception& e) {
      throw std::runtime_error("max_error: evaluation failed at point l=" +
                               std::to_string(l) + " (t=" + std::to_string(t) +
                               "): " + e.what());
    }
    if (va.size() != ve.size())
      throw std::invalid_argument("max_error: evaluators disagree on dimension");
    for (size_t c = 0; c < va.size(); ++c)
      worst = std::max(worst, std::abs(va[c] - ve[c]));
  }
  return worst;
}

VectorFn make_evaluator(const ExampleProblem& ex, MethodId method, int N) {
  const SincGrid grid = build_grid(method_kind(method), ex.problem.interval,
                                   params_for(ex, method), N);
  if (method_is_collocation(method)) {
    auto sol = std::make_shared<CollocationSolution>(
        collocation_solve(ex.problem, grid));
    return [sol](double t) { return sol->eval(t); };
  }
  auto sol = std::make_shared<NystromSolution>(nystrom_solve(ex.problem, grid));
  return [sol](double t) { return sol->eval(t); };
}

namespace {

ConvergenceRecord run_cell(const ExampleProblem& ex, MethodId method, int N) {
  ConvergenceRecord rec;
  rec.method = method;
  rec.N = N;
  rec.h = std::numeric_limits<double>::quiet_NaN();
  try {
    const auto t0 = Clock::now();
    rec.h = step_size(method_kind(method), params_for(ex, method), N);
    const VectorFn approx = make_evaluator(ex, method, N);
    rec.solve_time_s = seconds_since(t0);
    const auto t1 = Clock::now();
    rec.max_error = max_error(approx, ex.exact, ex.problem.interval);
    rec.eval_time_s = seconds_since(t1);
    rec.ok = true;
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
    rec.max_error = std::numeric_limits<double>::quiet_NaN();
    rec.solve_time_s = rec.eval_time_s =
        std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

}  // namespace

ConvergenceReport convergence_sweep(const ExampleProblem& ex,
                                    const std::vector<MethodId>& methods,
                                    const std::vector<int>& N_list, int jobs) {
  struct Cell {
    MethodId method;
    int N;
  };
  std::vector<Cell> cells;
  cells.reserve(methods.size() * N_list.size());
  for (MethodId m : methods)
    for (int N : N_list) cells.push_back({m, N});

  ConvergenceReport report(cells.size());
  if (jobs <= 1 || cells.size() <= 1) {
    for (size_t i = 0; i < cells.size(); ++i)
      report[i] = run_cell(ex, cells[i].method, cells[i].N);
    return report;
  }

  std::atomic<size_t> next{0};
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), cells.size());
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (size_t w = 0; w < nthreads; ++w)
    workers.emplace_back([&]() {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        report[i] = run_cell(ex, cells[i].method, cells[i].N);
      }
    });
  for (auto& th : workers) th.join();
  return report;
}

std::vector<BenchResult> accuracy_benchmark(const ExampleProblem& ex,
                                            double target, int max_N) {
  if (!(target > 0.0))
    throw std::invalid_argument("accuracy_benchmark: target must be positive");
  std::vector<BenchResult> results;
  results.reserve(kAllMethods.size());
  for (MethodId m : kAllMethods) {
    auto error_at = [&](int N) -> double {
      try {
        return max_error(make_evaluator(ex, m, N), ex.exact,
                         ex.problem.interval);
      } catch (const std::exception&) {
        return std::numeric_limits<double>::infinity();
      }
    };

    BenchResult res;
    res.method = m;
    int lo = 3, hi = -1;  // the search never probes below N = 4
    for (int N = 4; N <= max_N; N *= 2) {
      if (error_at(N) <= target) {
        hi = N;
        break;
      }
      lo = N;
    }
    if (hi < 0) {
      res.saturated = true;
      results.push_back(res);
      continue;
    }
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (error_at(mid) <= target)
        hi = mid;
      else
        lo = mid;
    }
    res.N = hi;

    // wall time of solve + 999 evaluations, median of 3 warm runs
    std::array<double, 3> times{};
    for (double& ts : times) {
      const auto t0 = Clock::now();
      const VectorFn approx = make_evaluator(ex, m, res.N);
      (void)max_error(approx, ex.exact, ex.problem.interval);
      ts = seconds_since(t0);
    }
    std::sort(times.begin(), times.end());
    res.time_s = times[1];
    results.push_back(res);
  }
  return results;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void emit_csv(const ConvergenceReport& report, std::ostream& out) {
  out << "method,N,h,max_error,solve_time_s,eval_time_s\n";
  for (const ConvergenceRecord& r : report)
    out << method_name(r.method) << ',' << r.N << ',' << format_double(r.h)
        << ',' << format_double(r.max_error) << ','
        << format_double(r.solve_time_s) << ',' << format_double(r.eval_time_s)
        << '\n';
}

void emit_bench_csv(const std::vector<BenchResult>& results, double target,
                    std::ostream& out) {
  out << "method,target,N,time_s,status\n";
  for (const BenchResult& r : results) {
    out << method_name(r.method) << ',' << format_double(target) << ',';
    if (r.saturated)
      out << ",,saturated\n";
    else
      out << r.N << ',' << format_double(r.time_s) << ",ok\n";
  }
}

}  // namespace sincivp
