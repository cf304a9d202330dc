#pragma once

#include "sincivp/ivp.hpp"

namespace sincivp {

// Solved node coefficients Y of the discrete system, component-major:
// y[c*(2N+1) + (j+N)] = y_c(t_j).
struct NodeValues {
  SincGrid grid;
  Vector y;

  double value(int comp, int j) const {
    return y[static_cast<size_t>(comp) * grid.size() + (j + grid.N)];
  }
};

// Assembles (I - B K) Y = B G + R on the grid and solves it by LU
// decomposition.  Throws SingularMatrixError when the discrete system is
// singular (excluded by theory only for all N sufficiently large).
NodeValues solve_system(const IvpProblem& prob, const SincGrid& grid);

// Nystrom solution: y(t) = r + sum_j {g(t_j) + K(t_j) Y_j} psi'(jh)
// J(j,h)(phi(t)).  The node combinations g + K Y are precomputed, so each
// evaluation costs O(nN) arithmetic plus 2N+1 sine-integral calls.
class NystromSolution {
 public:
  NystromSolution(IvpProblem prob, NodeValues values);

  // a <= t <= b required; endpoints use the analytic limits (r at t=a, the
  // J -> h limit at t=b).
  Vector eval(double t) const;
  // Offset-aware evaluation; exact at grid nodes even where t has rounded
  // onto an endpoint.
  Vector eval(const NodePoint& p) const;

  const NodeValues& values() const { return values_; }
  const IvpProblem& problem() const { return prob_; }
  const Vector& combo(int j) const {
    return combo_[static_cast<size_t>(j + values_.grid.N)];
  }

 private:
  IvpProblem prob_;
  NodeValues values_;
  std::vector<Vector> combo_;  // g(t_j) + K(t_j) Y_j per node
};

NystromSolution nystrom_solve(const IvpProblem& prob, const SincGrid& grid);

// Collocation solution: y_i(t) = y_{i,-N} w_a(t) + y_{i,N} w_b(t) +
// sum_j {y_{i,j} - y_{i,-N} w_a(t_j) - y_{i,N} w_b(t_j)} S(j,h)(phi(t)) with
// the auxiliary linear functions w_a = (b-t)/(b-a), w_b = (t-a)/(b-a).
// Elementary functions only; each evaluation costs O(nN).
class CollocationSolution {
 public:
  explicit CollocationSolution(NodeValues values);

  Vector eval(double t) const;
  Vector eval(const NodePoint& p) const;

  const NodeValues& values() const { return values_; }
  // (y_{c,-N}, y_{c,N})
  std::pair<double, double> boundary(int comp) const;

 private:
  int n_ = 0;
  NodeValues values_;
  Vector corrected_;  // y_{c,j} - y_{c,-N} w_a(t_j) - y_{c,N} w_b(t_j)
};

CollocationSolution collocation_solve(const IvpProblem& prob,
                                      const SincGrid& grid);

}  // namespace sincivp
