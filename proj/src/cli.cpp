#include "sincivp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sincivp/harness.hpp"

namespace sincivp {

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitSolverFailure = 3;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

bool parse_methods(const std::string& spec, std::vector<MethodId>& out) {
  if (spec == "all") {
    out.assign(kAllMethods.begin(), kAllMethods.end());
    return true;
  }
  for (const std::string& name : split_commas(spec)) {
    MethodId m;
    if (!parse_method(name, m)) return false;
    out.push_back(m);
  }
  return !out.empty();
}

bool parse_n_list(const std::string& spec, std::vector<int>& out) {
  for (const std::string& item : split_commas(spec)) {
    try {
      size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

// Writes through `body` either to stdout or to the given path.
int with_sink(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "sinc-ivp: cannot open output file '" << path << "'\n";
    return kExitBadArgs;
  }
  body(out);
  if (!out) {
    std::cerr << "sinc-ivp: write failure on '" << path << "'\n";
    return kExitSolverFailure;
  }
  return 0;
}

int do_solve(const std::string& example_id, const std::string& method_str,
             int N, int points, const std::string& output) {
  MethodId method;
  if (!parse_method(method_str, method)) {
    std::cerr << "sinc-ivp: unknown method '" << method_str << "'\n";
    return kExitBadArgs;
  }
  ExampleProblem ex;
  try {
    ex = example_by_id(example_id);
  } catch (const std::exception& e) {
    std::cerr << "sinc-ivp: " << e.what() << "\n";
    return kExitBadArgs;
  }
  if (N < 1 || points < 1) {
    std::cerr << "sinc-ivp: --N and --points must be positive\n";
    return kExitBadArgs;
  }

  VectorFn approx;
  double h = 0.0;
  try {
    h = step_size(method_kind(method),
                  method_kind(method) == TransformKind::SE ? ex.se_params
                                                           : ex.de_params,
                  N);
    approx = make_evaluator(ex, method, N);
  } catch (const std::exception& e) {
    std::cerr << "sinc-ivp: solve failed: " << e.what() << "\n";
    return kExitSolverFailure;
  }

  const Interval iv = ex.problem.interval;
  const int n = ex.problem.n;
  return with_sink(output, [&](std::ostream& out) {
    out << "# example=" << example_id << " method=" << method_name(method)
        << " N=" << N << " h=" << format_double(h) << '\n';
    out << "# mesh: interior equispaced, t_l = a + l*(b-a)/(points+1), l = "
           "1.."
        << points << '\n';
    out << 't';
    for (int c = 1; c <= n; ++c) out << ",y" << c;
    for (int c = 1; c <= n; ++c) out << ",exact" << c;
    for (int c = 1; c <= n; ++c) out << ",abs_err" << c;
    out << '\n';
    for (int l = 1; l <= points; ++l) {
      const double t = iv.a + l * (iv.b - iv.a) / (points + 1);
      const Vector ya = approx(t);
      const Vector ye = ex.exact(t);
      out << format_double(t);
      for (int c = 0; c < n; ++c) out << ',' << format_double(ya[c]);
      for (int c = 0; c < n; ++c) out << ',' << format_double(ye[c]);
      for (int c = 0; c < n; ++c)
        out << ',' << format_double(std::abs(ya[c] - ye[c]));
      out << '\n';
    }
  });
}

int do_converge(const std::string& example_id, const std::string& methods_str,
                const std::string& n_str, int jobs,
                const std::string& output) {
  std::vector<MethodId> methods;
  if (!parse_methods(methods_str, methods)) {
    std::cerr << "sinc-ivp: bad --methods '" << methods_str << "'\n";
    return kExitBadArgs;
  }
  std::vector<int> N_list;
  if (!parse_n_list(n_str, N_list)) {
    std::cerr << "sinc-ivp: bad --N list '" << n_str << "'\n";
    return kExitBadArgs;
  }
  if (!std::is_sorted(N_list.begin(), N_list.end())) {
    std::cerr << "sinc-ivp: --N list must be ascending\n";
    return kExitBadArgs;
  }
  if (jobs < 1) {
    std::cerr << "sinc-ivp: --jobs must be >= 1\n";
    return kExitBadArgs;
  }
  ExampleProblem ex;
  try {
    ex = example_by_id(example_id);
  } catch (const std::exception& e) {
    std::cerr << "sinc-ivp: " << e.what() << "\n";
    return kExitBadArgs;
  }

  const ConvergenceReport report = convergence_sweep(ex, methods, N_list, jobs);
  const int rc = with_sink(output, [&](std::ostream& out) {
    out << "# example=" << example_id
        << " max_error over 999 interior equispaced points, t_l = a + "
           "l*(b-a)/1000\n";
    emit_csv(report, out);
  });
  if (rc != 0) return rc;
  for (const ConvergenceRecord& r : report)
    if (!r.ok)
      std::cerr << "sinc-ivp: cell " << method_name(r.method) << " N=" << r.N
                << " failed: " << r.error << "\n";
  const bool any_ok =
      std::any_of(report.begin(), report.end(),
                  [](const ConvergenceRecord& r) { return r.ok; });
  return any_ok ? 0 : kExitSolverFailure;
}

int do_bench(const std::string& example_id, double target,
             const std::string& output) {
  if (!(target > 0.0)) {
    std::cerr << "sinc-ivp: --target must be positive\n";
    return kExitBadArgs;
  }
  ExampleProblem ex;
  try {
    ex = example_by_id(example_id);
  } catch (const std::exception& e) {
    std::cerr << "sinc-ivp: " << e.what() << "\n";
    return kExitBadArgs;
  }
  const std::vector<BenchResult> results = accuracy_benchmark(ex, target);
  const int rc = with_sink(output, [&](std::ostream& out) {
    out << "# example=" << example_id
        << " smallest N from a doubling-then-bisection search reaching the "
           "target; time = solve + 999 evaluations, median of 3\n";
    emit_bench_csv(results, target, out);
  });
  if (rc != 0) return rc;
  const bool any_ok =
      std::any_of(results.begin(), results.end(),
                  [](const BenchResult& r) { return !r.saturated; });
  return any_ok ? 0 : kExitSolverFailure;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"SE/DE Sinc-collocation and Sinc-Nystrom solvers for systems "
               "of linear initial value problems"};
  app.require_subcommand(1);

  std::string example_id, method_str, methods_str = "all", n_str, output;
  int N = 0, points = 999, jobs = 1;
  double target = 1e-8;

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve one example with one method; CSV of per-point values");
  solve->add_option("--example", example_id, "Example id: 1, 2, 3 or exp")
      ->required();
  solve
      ->add_option("--method", method_str,
                   "se-nystrom | se-collocation | de-nystrom | de-collocation")
      ->required();
  solve->add_option("--N", N, "Grid parameter (2N+1 nodes)")->required();
  solve->add_option("--points", points, "Interior evaluation points")
      ->capture_default_str();
  solve->add_option("--output", output, "Output CSV path (default stdout)");

  CLI::App* converge = app.add_subcommand(
      "converge", "Error-vs-N sweep; ConvergenceReport CSV");
  converge->add_option("--example", example_id, "Example id: 1, 2, 3 or exp")
      ->required();
  converge
      ->add_option("--methods", methods_str,
                   "all or comma list of method names")
      ->capture_default_str();
  converge->add_option("--N", n_str, "Comma list of ascending N values")
      ->required();
  converge->add_option("--jobs", jobs, "Parallel sweep cells")
      ->capture_default_str();
  converge->add_option("--output", output, "Output CSV path (default stdout)");

  CLI::App* bench = app.add_subcommand(
      "bench", "Accuracy benchmark: smallest N and time per method");
  bench->add_option("--example", example_id, "Example id: 1, 2, 3 or exp")
      ->required();
  bench->add_option("--target", target, "Target maximum error")
      ->capture_default_str();
  bench->add_option("--output", output, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (solve->parsed())
      return do_solve(example_id, method_str, N, points, output);
    if (converge->parsed())
      return do_converge(example_id, methods_str, n_str, jobs, output);
    if (bench->parsed()) return do_bench(example_id, target, output);
  } catch (const std::exception& e) {
    std::cerr << "sinc-ivp: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return kExitBadArgs;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("sinc-ivp");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (std::string& s : full) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace sincivp
