#include "hre/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "hre/errors.hpp"

namespace hre {

namespace {

constexpr double kSingularRelative = 1e-12;

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v)) throw ValidationError(std::string(what) + " has a non-finite entry");
}

// Row-reduces `work` (n x n) in place together with `rhs` (n x m, row-major).
// On return `work` is upper triangular with rows swapped into pivot order.
void eliminate(std::vector<double>& work, std::size_t n, std::vector<double>& rhs,
               std::size_t m, double threshold) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work[r * n + col]) > std::abs(work[pivot * n + col])) pivot = r;
    if (std::abs(work[pivot * n + col]) < threshold) {
      throw SingularMatrixError("matrix is singular at column " +
                                std::to_string(col + 1));
    }
    if (pivot != col) {
      std::swap_ranges(work.begin() + pivot * n, work.begin() + pivot * n + n,
                       work.begin() + col * n);
      std::swap_ranges(rhs.begin() + pivot * m, rhs.begin() + pivot * m + m,
                       rhs.begin() + col * m);
    }
    const double diag = work[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = work[r * n + col] / diag;
      if (factor == 0.0) continue;
      work[r * n + col] = 0.0;
      for (std::size_t c = col + 1; c < n; ++c) work[r * n + c] -= factor * work[col * n + c];
      for (std::size_t c = 0; c < m; ++c) rhs[r * m + c] -= factor * rhs[col * m + c];
    }
  }
}

void back_substitute(const std::vector<double>& work, std::size_t n,
                     std::vector<double>& rhs, std::size_t m) {
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t c = 0; c < m; ++c) {
      double acc = rhs[ii * m + c];
      for (std::size_t k = ii + 1; k < n; ++k) acc -= work[ii * n + k] * rhs[k * m + c];
      rhs[ii * m + c] = acc / work[ii * n + ii];
    }
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw ValidationError("matrix dimensions must be positive");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ValidationError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) throw ValidationError("entry count does not match dimensions");
  require_finite(data_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("matrix dimensions must be positive");
  const std::size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ValidationError("ragged row in matrix literal");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return DenseMatrix(rows.size(), cols, std::move(flat));
}

double DenseMatrix::max_abs() const {
  double out = 0.0;
  for (double v : data_) out = std::max(out, std::abs(v));
  return out;
}

DenseVector multiply(const DenseMatrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) throw ValidationError("dimension mismatch in matrix-vector product");
  DenseVector y(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("dimension mismatch in matrix product");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double av = a(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += av * b(k, c);
    }
  return out;
}

DenseVector solve_linear(const DenseMatrix& a, std::span<const double> b) {
  if (!a.square()) throw ValidationError("solve_linear needs a square matrix");
  if (b.size() != a.rows()) throw ValidationError("right-hand side length does not match matrix");
  require_finite(b, "right-hand side");
  const std::size_t n = a.rows();
  std::vector<double> work(a.data().begin(), a.data().end());
  std::vector<double> rhs(b.begin(), b.end());
  eliminate(work, n, rhs, 1, kSingularRelative * a.max_abs());
  back_substitute(work, n, rhs, 1);
  return rhs;
}

DenseMatrix invert(const DenseMatrix& a) {
  if (!a.square()) throw ValidationError("invert needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<double> work(a.data().begin(), a.data().end());
  std::vector<double> rhs(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) rhs[i * n + i] = 1.0;
  eliminate(work, n, rhs, n, kSingularRelative * a.max_abs());
  back_substitute(work, n, rhs, n);
  return DenseMatrix(n, n, std::move(rhs));
}

bool is_positive_definite(const DenseMatrix& a, double relative_floor) {
  if (!a.square()) throw ValidationError("positive definiteness needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (!(d > relative_floor * std::abs(a(j, j)))) return false;
    const double root = std::sqrt(d);
    l[j * n + j] = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / root;
    }
  }
  return true;
}

EigenPair power_iteration(const DenseMatrix& m, double tol, int max_iter) {
  if (!m.square()) throw ValidationError("power iteration needs a square matrix");
  if (!(tol > 0.0)) throw ValidationError("power iteration tolerance must be positive");
  for (double v : m.data())
    if (!(v > 0.0)) throw ValidationError("power iteration needs an entrywise positive matrix");

  const std::size_t n = m.rows();
  DenseVector v(n, 1.0 / static_cast<double>(n));
  double residual = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    DenseVector y = multiply(m, v);
    const double lambda = std::accumulate(y.begin(), y.end(), 0.0);
    double diff = 0.0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= lambda;
      diff = std::max(diff, std::abs(y[i] - v[i]));
      vmax = std::max(vmax, std::abs(v[i]));
    }
    // m v - lambda v = lambda (y - v), so this bounds the residual of (lambda, v).
    if (diff <= tol * vmax) return {lambda, std::move(v), it};
    residual = lambda * diff;
    v = std::move(y);
  }
  throw ConvergenceError("power iteration did not converge in " +
                             std::to_string(max_iter) + " iterations",
                         v, residual);
}

}  // namespace hre
