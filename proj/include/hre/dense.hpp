#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hre {

/// Row-major dense matrix of finite reals.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const double> data() const { return data_; }

  double max_abs() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

using DenseVector = std::vector<double>;

DenseVector multiply(const DenseMatrix& a, std::span<const double> x);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Gaussian elimination with partial pivoting. Throws SingularMatrixError
/// when a pivot falls below 1e-12 times the largest entry magnitude.
DenseVector solve_linear(const DenseMatrix& a, std::span<const double> b);

/// Gauss-Jordan inverse with partial pivoting; same singularity rule.
DenseMatrix invert(const DenseMatrix& a);

/// Cholesky test for a symmetric matrix. A pivot at or below
/// `relative_floor` times its diagonal entry counts as not positive.
bool is_positive_definite(const DenseMatrix& a, double relative_floor = 1e-10);

struct EigenPair {
  double value;
  DenseVector vector;  // sums to 1
  int iterations;
};

/// Dominant eigenpair of an entrywise positive matrix, starting from the
/// uniform vector with L1 normalization. Stops once successive iterates
/// differ by at most tol * |v|_inf, which certifies
/// |m v - lambda v|_inf <= tol * lambda * |v|_inf for the returned pair.
/// Throws ConvergenceError after max_iter steps.
EigenPair power_iteration(const DenseMatrix& m, double tol = 1e-10,
                          int max_iter = 10000);

}  // namespace hre
