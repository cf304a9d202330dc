#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sincivp/transform.hpp"

namespace sincivp {

using Vector = std::vector<double>;

struct IvpProblem;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  double& operator()(int i, int j) { return data_[idx(i, j)]; }
  double operator()(int i, int j) const { return data_[idx(i, j)]; }

  double* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }
  const double* row(int i) const {
    return data_.data() + static_cast<size_t>(i) * cols_;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * cols_ + static_cast<size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Vector matvec(const DenseMatrix& A, const Vector& x);

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// PA = LU with partial pivoting, L unit-diagonal packed below U.
struct LuFactors {
  DenseMatrix lu;
  std::vector<int> perm;  // x_i of the permuted system reads b[perm[i]]
  int sign = 1;
};

// I^(-1)_N = [sigma_{i-j}], i,j = -N..N: the (2N+1)x(2N+1) Toeplitz matrix of
// Sinc indefinite integration collocated at the grid points.
DenseMatrix build_imatrix(int N);

LuFactors lu_factor(DenseMatrix A);
Vector lu_solve(const LuFactors& f, const Vector& b);

// Discrete system (I - B K) Y = B G + R with B = h I^(-1)_N D_N, laid out
// component-major: row p*(2N+1)+l is equation p collocated at node j = l-N.
std::pair<DenseMatrix, Vector> assemble_system(const SincGrid& grid,
                                               const IvpProblem& prob);

}  // namespace sincivp
