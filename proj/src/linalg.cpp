#include "sincivp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sincivp/ivp.hpp"
#include "sincivp/sinc_kernel.hpp"

namespace sincivp {

Vector matvec(const DenseMatrix& A, const Vector& x) {
  if (static_cast<size_t>(A.cols()) != x.size())
    throw std::invalid_argument("matvec: dimension mismatch");
  Vector y(static_cast<size_t>(A.rows()), 0.0);
  for (int i = 0; i < A.rows(); ++i) {
    const double* ai = A.row(i);
    double s = 0.0;
    for (int j = 0; j < A.cols(); ++j) s += ai[j] * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  return y;
}

DenseMatrix build_imatrix(int N) {
  if (N < 0) throw std::invalid_argument("build_imatrix: N must be >= 0");
  const int M = 2 * N + 1;
  // Toeplitz: only the 4N+1 distinct sigma values are computed.
  std::vector<double> sig(static_cast<size_t>(4 * N + 1));
  for (int k = -2 * N; k <= 2 * N; ++k)
    sig[static_cast<size_t>(k + 2 * N)] = sigma_weight(k);
  DenseMatrix A(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      A(i, j) = sig[static_cast<size_t>(i - j + 2 * N)];
  return A;
}

LuFactors lu_factor(DenseMatrix A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("lu_factor: matrix must be square");
  const int n = A.rows();
  LuFactors f;
  f.perm.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) f.perm[static_cast<size_t>(i)] = i;
  f.sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(A(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(A(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0)
      throw SingularMatrixError("lu_factor: singular at column " +
                                std::to_string(k));
    if (piv != k) {
      std::swap_ranges(A.row(k), A.row(k) + n, A.row(piv));
      std::swap(f.perm[static_cast<size_t>(k)],
                f.perm[static_cast<size_t>(piv)]);
      f.sign = -f.sign;
    }
    const double dInv = 1.0 / A(k, k);
    const double* rowk = A.row(k);
    for (int i = k + 1; i < n; ++i) {
      double* rowi = A.row(i);
      const double lik = rowi[k] * dInv;
      rowi[k] = lik;
      if (lik != 0.0)
        for (int j = k + 1; j < n; ++j) rowi[j] -= lik * rowk[j];
    }
  }
  f.lu = std::move(A);
  return f;
}

Vector lu_solve(const LuFactors& f, const Vector& b) {
  const int n = f.lu.rows();
  if (b.size() != static_cast<size_t>(n))
    throw std::invalid_argument("lu_solve: dimension mismatch");
  Vector x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<size_t>(i)] = b[static_cast<size_t>(f.perm[static_cast<size_t>(i)])];
  for (int i = 0; i < n; ++i) {
    const double* li = f.lu.row(i);
    double s = x[static_cast<size_t>(i)];
    for (int j = 0; j < i; ++j) s -= li[j] * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    const double* ui = f.lu.row(i);
    double s = x[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= ui[j] * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = s / ui[i];
  }
  return x;
}

std::pair<DenseMatrix, Vector> assemble_system(const SincGrid& grid,
                                               const IvpProblem& prob) {
  validate(prob);
  if (prob.interval.a != grid.interval.a || prob.interval.b != grid.interval.b)
    throw std::invalid_argument(
        "assemble_system: grid and problem intervals differ");
  const int M = grid.size();
  const int n = prob.n;
  const int m = M * n;

  // coefficients and forcing at every node, checked finite
  std::vector<DenseMatrix> K(static_cast<size_t>(M));
  std::vector<Vector> G(static_cast<size_t>(M));
  for (int l = 0; l < M; ++l) {
    const NodePoint& node = grid.nodes[static_cast<size_t>(l)];
    DenseMatrix Kl = prob.coeff(node);
    Vector Gl = prob.forcing(node);
    if (Kl.rows() != n || Kl.cols() != n || Gl.size() != static_cast<size_t>(n))
      throw std::invalid_argument(
          "assemble_system: evaluator dimensions do not match n");
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q)
        if (!std::isfinite(Kl(p, q)))
          throw std::runtime_error(
              "assemble_system: non-finite k(" + std::to_string(p) + "," +
              std::to_string(q) + ") at node j=" + std::to_string(l - grid.N) +
              " (t=" + std::to_string(node.t) + ")");
      if (!std::isfinite(Gl[static_cast<size_t>(p)]))
        throw std::runtime_error(
            "assemble_system: non-finite g(" + std::to_string(p) +
            ") at node j=" + std::to_string(l - grid.N) +
            " (t=" + std::to_string(node.t) + ")");
    }
    K[static_cast<size_t>(l)] = std::move(Kl);
    G[static_cast<size_t>(l)] = std::move(Gl);
  }

  // B = h I^(-1)_N D_N, formed once and reused for A and the right side
  std::vector<double> sig(static_cast<size_t>(4 * grid.N + 1));
  for (int k = -2 * grid.N; k <= 2 * grid.N; ++k)
    sig[static_cast<size_t>(k + 2 * grid.N)] = sigma_weight(k);
  DenseMatrix B(M, M);
  for (int i = 0; i < M; ++i) {
    double* bi = B.row(i);
    for (int l = 0; l < M; ++l)
      bi[l] = grid.h * sig[static_cast<size_t>(i - l + 2 * grid.N)] *
              grid.dweights[static_cast<size_t>(l)];
  }

  // block (p,q) of A is delta_pq I - B K_pq, component-major ordering
  DenseMatrix A(m, m);
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < M; ++i) {
      double* arow = A.row(p * M + i);
      const double* bi = B.row(i);
      for (int q = 0; q < n; ++q)
        for (int l = 0; l < M; ++l)
          arow[q * M + l] = (p == q && i == l ? 1.0 : 0.0) -
                            bi[l] * K[static_cast<size_t>(l)](p, q);
    }

  Vector rhs(static_cast<size_t>(m));
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < M; ++i) {
      const double* bi = B.row(i);
      double s = 0.0;
      for (int l = 0; l < M; ++l)
        s += bi[l] * G[static_cast<size_t>(l)][static_cast<size_t>(p)];
      rhs[static_cast<size_t>(p * M + i)] = s + prob.init[static_cast<size_t>(p)];
    }

  return {std::move(A), std::move(rhs)};
}

}  // namespace sincivp
