#include "sincivp/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "sincivp/sinc_kernel.hpp"

namespace sincivp {

NodeValues solve_system(const IvpProblem& prob, const SincGrid& grid) {
  auto [A, rhs] = assemble_system(grid, prob);
  LuFactors f = lu_factor(std::move(A));
  Vector y = lu_solve(f, rhs);
  return NodeValues{grid, std::move(y)};
}

NystromSolution::NystromSolution(IvpProblem prob, NodeValues values)
    : prob_(std::move(prob)), values_(std::move(values)) {
  const SincGrid& grid = values_.grid;
  const int M = grid.size();
  const int n = prob_.n;
  combo_.resize(static_cast<size_t>(M));
  for (int l = 0; l < M; ++l) {
    const NodePoint& node = grid.nodes[static_cast<size_t>(l)];
    const DenseMatrix K = prob_.coeff(node);
    Vector w = prob_.forcing(node);
    for (int p = 0; p < n; ++p) {
      double s = 0.0;
      for (int q = 0; q < n; ++q)
        s += K(p, q) * values_.y[static_cast<size_t>(q * M + l)];
      w[static_cast<size_t>(p)] += s;
    }
    combo_[static_cast<size_t>(l)] = std::move(w);
  }
}

Vector NystromSolution::eval(const NodePoint& p) const {
  const SincGrid& grid = values_.grid;
  const double x = inverse_from_offsets(grid.kind, p.off_a, p.off_b);
  const int M = grid.size();
  Vector out = prob_.init;
  for (int l = 0; l < M; ++l) {
    const double s = grid.dweights[static_cast<size_t>(l)] *
                     indef_basis(l - grid.N, grid.h, x);
    const Vector& w = combo_[static_cast<size_t>(l)];
    for (int c = 0; c < prob_.n; ++c)
      out[static_cast<size_t>(c)] += w[static_cast<size_t>(c)] * s;
  }
  return out;
}

Vector NystromSolution::eval(double t) const {
  const Interval& iv = values_.grid.interval;
  if (!(t >= iv.a) || !(t <= iv.b))
    throw std::domain_error("NystromSolution::eval: t outside [a, b]");
  if (t == iv.a) return prob_.init;  // every J(j,h)(phi(t)) -> 0
  if (t == iv.b) {
    // J(j,h)(phi(t)) -> h
    const SincGrid& grid = values_.grid;
    Vector out = prob_.init;
    for (int l = 0; l < grid.size(); ++l) {
      const double s = grid.dweights[static_cast<size_t>(l)] * grid.h;
      const Vector& w = combo_[static_cast<size_t>(l)];
      for (int c = 0; c < prob_.n; ++c)
        out[static_cast<size_t>(c)] += w[static_cast<size_t>(c)] * s;
    }
    return out;
  }
  return eval(NodePoint{t, t - iv.a, iv.b - t});
}

NystromSolution nystrom_solve(const IvpProblem& prob, const SincGrid& grid) {
  return NystromSolution(prob, solve_system(prob, grid));
}

CollocationSolution::CollocationSolution(NodeValues values)
    : values_(std::move(values)) {
  const SincGrid& grid = values_.grid;
  const int M = grid.size();
  n_ = static_cast<int>(values_.y.size()) / M;
  const double len = grid.interval.b - grid.interval.a;
  corrected_.resize(values_.y.size());
  for (int c = 0; c < n_; ++c) {
    const double ya = values_.y[static_cast<size_t>(c * M)];
    const double yb = values_.y[static_cast<size_t>(c * M + M - 1)];
    for (int l = 0; l < M; ++l) {
      const NodePoint& node = grid.nodes[static_cast<size_t>(l)];
      const double wa = node.off_b / len;
      const double wb = node.off_a / len;
      corrected_[static_cast<size_t>(c * M + l)] =
          values_.y[static_cast<size_t>(c * M + l)] - ya * wa - yb * wb;
    }
  }
}

Vector CollocationSolution::eval(const NodePoint& p) const {
  const SincGrid& grid = values_.grid;
  const double x = inverse_from_offsets(grid.kind, p.off_a, p.off_b);
  const int M = grid.size();
  const double len = grid.interval.b - grid.interval.a;
  const double wa = p.off_b / len;
  const double wb = p.off_a / len;
  Vector out(static_cast<size_t>(n_));
  for (int c = 0; c < n_; ++c)
    out[static_cast<size_t>(c)] =
        values_.y[static_cast<size_t>(c * M)] * wa +
        values_.y[static_cast<size_t>(c * M + M - 1)] * wb;
  for (int l = 0; l < M; ++l) {
    const double s = sinc_basis(l - grid.N, grid.h, x);
    for (int c = 0; c < n_; ++c)
      out[static_cast<size_t>(c)] += corrected_[static_cast<size_t>(c * M + l)] * s;
  }
  return out;
}

Vector CollocationSolution::eval(double t) const {
  const SincGrid& grid = values_.grid;
  const Interval& iv = grid.interval;
  if (!(t >= iv.a) || !(t <= iv.b))
    throw std::domain_error("CollocationSolution::eval: t outside [a, b]");
  const int M = grid.size();
  if (t == iv.a || t == iv.b) {
    // w_a(a) = 1, w_b(a) = 0 and all S terms vanish in the limit
    const int l = t == iv.a ? 0 : M - 1;
    Vector out(static_cast<size_t>(n_));
    for (int c = 0; c < n_; ++c)
      out[static_cast<size_t>(c)] = values_.y[static_cast<size_t>(c * M + l)];
    return out;
  }
  return eval(NodePoint{t, t - iv.a, iv.b - t});
}

std::pair<double, double> CollocationSolution::boundary(int comp) const {
  const int M = values_.grid.size();
  return {values_.y[static_cast<size_t>(comp * M)],
          values_.y[static_cast<size_t>(comp * M + M - 1)]};
}

CollocationSolution collocation_solve(const IvpProblem& prob,
                                      const SincGrid& grid) {
  return CollocationSolution(solve_system(prob, grid));
}

}  // namespace sincivp
