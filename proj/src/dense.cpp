#include "shocklab/dense.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "shocklab/common.hpp"

namespace shocklab {

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("matrix not square");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m[i][j];
  }
  return a;
}

}  // namespace

std::vector<std::complex<double>> dense_eigs(
    const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n > static_cast<std::size_t>(max_dense_dim())) {
    throw ResourceLimitError("dense eigensolver capped at dimension " +
                             std::to_string(max_dense_dim()) + ", requested " +
                             std::to_string(n));
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(m),
                                             /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed to converge");
  }
  std::vector<std::complex<double>> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = solver.eigenvalues()(i);
  std::sort(ev.begin(), ev.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return ev;
}

std::vector<std::complex<double>> dense_eigs(const SparseMatrix& m) {
  return dense_eigs(m.to_dense());
}

std::vector<double> stationary_from_nullspace(const SparseMatrix& w) {
  const std::size_t n = w.dim();
  if (n > static_cast<std::size_t>(max_dense_dim())) {
    throw ResourceLimitError("null-space solve capped at dimension " +
                             std::to_string(max_dense_dim()));
  }
  // A = W^T with the first equation replaced by sum(mu) = 1.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  const auto dense = w.to_dense();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dense[j][i];
  }
  a.row(0).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(0) = 1.0;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::VectorXd x = lu.solve(b);
  // one step of iterative refinement
  Eigen::VectorXd residual = b - a * x;
  x += lu.solve(residual);

  std::vector<double> mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = x(i);
  return mu;
}

}  // namespace shocklab
