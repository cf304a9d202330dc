#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sincivp/cli.hpp"
#include "sincivp/harness.hpp"
#include "sincivp/sinc_kernel.hpp"

namespace py = pybind11;
using namespace sincivp;

namespace {

std::vector<std::vector<double>> matrix_to_rows(const DenseMatrix& A) {
  std::vector<std::vector<double>> rows(static_cast<size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(A.cols()));
    for (int j = 0; j < A.cols(); ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = A(i, j);
  }
  return rows;
}

IvpProblem make_problem(
    int n,
    std::function<std::vector<std::vector<double>>(const NodePoint&)> coeff,
    std::function<Vector(const NodePoint&)> forcing, Vector init, double a,
    double b) {
  IvpProblem prob;
  prob.n = n;
  prob.coeff = [n, coeff = std::move(coeff)](const NodePoint& p) {
    py::gil_scoped_acquire gil;
    const auto rows = coeff(p);
    DenseMatrix K(n, n);
    if (rows.size() != static_cast<size_t>(n))
      throw std::invalid_argument("coeff must return an n x n matrix");
    for (int i = 0; i < n; ++i) {
      if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(n))
        throw std::invalid_argument("coeff must return an n x n matrix");
      for (int j = 0; j < n; ++j)
        K(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return K;
  };
  prob.forcing = [forcing = std::move(forcing)](const NodePoint& p) {
    py::gil_scoped_acquire gil;
    return forcing(p);
  };
  prob.init = std::move(init);
  prob.interval = {a, b};
  validate(prob);
  return prob;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SE/DE Sinc-collocation and Sinc-Nystrom solvers for systems of "
            "linear initial value problems on finite intervals";

  py::enum_<TransformKind>(m, "TransformKind")
      .value("SE", TransformKind::SE)
      .value("DE", TransformKind::DE);

  py::enum_<MethodId>(m, "MethodId")
      .value("SE_NYSTROM", MethodId::SeNystrom)
      .value("SE_COLLOCATION", MethodId::SeCollocation)
      .value("DE_NYSTROM", MethodId::DeNystrom)
      .value("DE_COLLOCATION", MethodId::DeCollocation);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_readwrite("a", &Interval::a)
      .def_readwrite("b", &Interval::b)
      .def("__repr__", [](const Interval& iv) {
        return "Interval(" + format_double(iv.a) + ", " + format_double(iv.b) +
               ")";
      });

  py::class_<RegularityParams>(m, "RegularityParams")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("d"))
      .def_readwrite("alpha", &RegularityParams::alpha)
      .def_readwrite("d", &RegularityParams::d);

  py::class_<NodePoint>(m, "NodePoint")
      .def(py::init<double, double, double>(), py::arg("t"), py::arg("off_a"),
           py::arg("off_b"))
      .def_readonly("t", &NodePoint::t)
      .def_readonly("off_a", &NodePoint::off_a)
      .def_readonly("off_b", &NodePoint::off_b);

  py::class_<SincGrid>(m, "SincGrid")
      .def_readonly("kind", &SincGrid::kind)
      .def_readonly("interval", &SincGrid::interval)
      .def_readonly("params", &SincGrid::params)
      .def_readonly("N", &SincGrid::N)
      .def_readonly("h", &SincGrid::h)
      .def_readonly("nodes", &SincGrid::nodes)
      .def_readonly("dweights", &SincGrid::dweights)
      .def("size", &SincGrid::size)
      .def("node", &SincGrid::node, py::arg("j"),
           py::return_value_policy::reference_internal)
      .def("dweight", &SincGrid::dweight, py::arg("j"));

  py::class_<DenseMatrix>(m, "DenseMatrix")
      .def("rows", &DenseMatrix::rows)
      .def("cols", &DenseMatrix::cols)
      .def("to_rows", &matrix_to_rows)
      .def("__getitem__", [](const DenseMatrix& A, std::pair<int, int> ij) {
        if (ij.first < 0 || ij.first >= A.rows() || ij.second < 0 ||
            ij.second >= A.cols())
          throw py::index_error();
        return A(ij.first, ij.second);
      });

  py::class_<IvpProblem>(m, "IvpProblem")
      .def_readonly("n", &IvpProblem::n)
      .def_readonly("init", &IvpProblem::init)
      .def_readonly("interval", &IvpProblem::interval)
      .def("coeff", [](const IvpProblem& p, const NodePoint& np) {
        return matrix_to_rows(p.coeff(np));
      })
      .def("forcing",
           [](const IvpProblem& p, const NodePoint& np) { return p.forcing(np); });

  py::class_<ExampleProblem>(m, "ExampleProblem")
      .def_readonly("name", &ExampleProblem::name)
      .def_readonly("problem", &ExampleProblem::problem)
      .def_readonly("se_params", &ExampleProblem::se_params)
      .def_readonly("de_params", &ExampleProblem::de_params)
      .def("exact",
           [](const ExampleProblem& ex, double t) { return ex.exact(t); });

  py::class_<NodeValues>(m, "NodeValues")
      .def_readonly("grid", &NodeValues::grid)
      .def_readonly("y", &NodeValues::y)
      .def("value", &NodeValues::value, py::arg("comp"), py::arg("j"));

  py::class_<NystromSolution>(m, "NystromSolution")
      .def("__call__",
           [](const NystromSolution& s, double t) { return s.eval(t); },
           py::arg("t"))
      .def("eval_node",
           [](const NystromSolution& s, const NodePoint& p) {
             return s.eval(p);
           })
      .def_property_readonly("values", &NystromSolution::values,
                             py::return_value_policy::reference_internal)
      .def("combo", &NystromSolution::combo, py::arg("j"),
           py::return_value_policy::reference_internal);

  py::class_<CollocationSolution>(m, "CollocationSolution")
      .def("__call__",
           [](const CollocationSolution& s, double t) { return s.eval(t); },
           py::arg("t"))
      .def("eval_node",
           [](const CollocationSolution& s, const NodePoint& p) {
             return s.eval(p);
           })
      .def_property_readonly("values", &CollocationSolution::values,
                             py::return_value_policy::reference_internal)
      .def("boundary", &CollocationSolution::boundary, py::arg("comp"));

  py::class_<ConvergenceRecord>(m, "ConvergenceRecord")
      .def_readonly("method", &ConvergenceRecord::method)
      .def_readonly("N", &ConvergenceRecord::N)
      .def_readonly("h", &ConvergenceRecord::h)
      .def_readonly("max_error", &ConvergenceRecord::max_error)
      .def_readonly("solve_time_s", &ConvergenceRecord::solve_time_s)
      .def_readonly("eval_time_s", &ConvergenceRecord::eval_time_s)
      .def_readonly("ok", &ConvergenceRecord::ok)
      .def_readonly("error", &ConvergenceRecord::error);

  py::class_<BenchResult>(m, "BenchResult")
      .def_readonly("method", &BenchResult::method)
      .def_readonly("N", &BenchResult::N)
      .def_readonly("time_s", &BenchResult::time_s)
      .def_readonly("saturated", &BenchResult::saturated);

  // scalar kernels
  m.def("sinc_basis", &sinc_basis, py::arg("j"), py::arg("h"), py::arg("x"));
  m.def("sine_integral", &sine_integral, py::arg("x"));
  m.def("indef_basis", &indef_basis, py::arg("j"), py::arg("h"), py::arg("x"));
  m.def("sigma_weight", &sigma_weight, py::arg("k"));
  m.def("sine_integral_calls", &sine_integral_calls);
  m.def("reset_sine_integral_calls", &reset_sine_integral_calls);

  // transformations and grids
  m.def("se_forward", &se_forward);
  m.def("se_inverse", py::overload_cast<double, const Interval&>(&se_inverse));
  m.def("se_derivative", &se_derivative);
  m.def("de_forward", &de_forward);
  m.def("de_inverse", py::overload_cast<double, const Interval&>(&de_inverse));
  m.def("de_derivative", &de_derivative);
  m.def("inverse_from_offsets", &inverse_from_offsets);
  m.def("step_size", &step_size, py::arg("kind"), py::arg("params"),
        py::arg("N"));
  m.def("build_grid", &build_grid, py::arg("kind"), py::arg("interval"),
        py::arg("params"), py::arg("N"));

  // problems
  m.def("example_halm", &example_halm);
  m.def("example_singular", &example_singular);
  m.def("example_dense_singularities", &example_dense_singularities);
  m.def("example_exponential", &example_exponential);
  m.def("example_by_id", &example_by_id, py::arg("id"));
  m.def("make_problem", &make_problem, py::arg("n"), py::arg("coeff"),
        py::arg("forcing"), py::arg("init"), py::arg("a"), py::arg("b"),
        "Build a problem y' = K(t) y + g(t), y(a) = r from Python callables "
        "taking a NodePoint");

  // solvers (GIL released; Python-callable problems re-acquire per call)
  m.def("solve_system", &solve_system,
        py::call_guard<py::gil_scoped_release>());
  m.def("nystrom_solve", &nystrom_solve,
        py::call_guard<py::gil_scoped_release>());
  m.def("collocation_solve", &collocation_solve,
        py::call_guard<py::gil_scoped_release>());

  // harness
  m.def("method_name",
        [](MethodId mid) { return std::string(method_name(mid)); });
  m.def("max_error", &max_error, py::arg("approx"), py::arg("exact"),
        py::arg("interval"), py::arg("points") = 999,
        py::call_guard<py::gil_scoped_release>());
  m.def("convergence_sweep", &convergence_sweep, py::arg("example"),
        py::arg("methods"), py::arg("N_list"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("accuracy_benchmark", &accuracy_benchmark, py::arg("example"),
        py::arg("target"), py::arg("max_N") = 512,
        py::call_guard<py::gil_scoped_release>());
  m.def("report_to_csv", [](const ConvergenceReport& report) {
    std::ostringstream os;
    emit_csv(report, os);
    return os.str();
  });
  m.def("bench_to_csv",
        [](const std::vector<BenchResult>& results, double target) {
          std::ostringstream os;
          emit_bench_csv(results, target, os);
          return os.str();
        });
  m.def("run_cli",
        [](const std::vector<std::string>& args) { return run_cli(args); },
        "Invoke the sinc-ivp command line in-process");

  m.attr("__version__") = "0.1.0";
}
