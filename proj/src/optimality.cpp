#include "hre/optimality.hpp"

#include <cmath>

#include "hre/errors.hpp"

namespace hre {

namespace {

void require_positive(std::span<const double> mu, std::size_t n) {
  if (mu.size() != n) throw ValidationError("priority vector length does not match matrix");
  for (double v : mu)
    if (!std::isfinite(v) || v <= 0.0)
      throw ValidationError("priority vector must be finite and strictly positive");
}

void require_reciprocal(const PcMatrix& matrix) {
  if (!is_reciprocal(matrix))
    throw NonReciprocalError(
        "optimality diagnostics assume m_ij = 1/m_ji; the matrix is not reciprocal");
}

}  // namespace

double error_function(std::span<const double> mu, const PcMatrix& matrix) {
  const std::size_t n = matrix.size();
  require_positive(mu, n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::log(matrix(i, j)) - std::log(mu[i]) + std::log(mu[j]);
      total += d * d;
    }
  return total;
}

std::vector<double> error_gradient(std::span<const double> mu, const PcMatrix& matrix) {
  const std::size_t n = matrix.size();
  require_positive(mu, n);
  require_reciprocal(matrix);
  std::vector<double> grad(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) acc += std::log(mu[j]) + std::log(matrix(i, j));
    acc -= static_cast<double>(n - 1) * std::log(mu[i]);
    grad[i] = -4.0 * acc / mu[i];
  }
  return grad;
}

DenseMatrix stationary_hessian(std::span<const double> mu) {
  const std::size_t n = mu.size();
  DenseMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = i == j ? 4.0 * static_cast<double>(n - 1) / (mu[i] * mu[i])
                       : -4.0 / (mu[i] * mu[j]);
  return h;
}

OptimalityReport optimality_report(std::span<const double> mu, const PcMatrix& matrix,
                                   std::span<const std::size_t> unknowns) {
  const std::size_t n = matrix.size();
  require_positive(mu, n);
  for (std::size_t u : unknowns)
    if (u >= n) throw ValidationError("unknown index outside the matrix");

  OptimalityReport report;
  report.error_value = error_function(mu, matrix);

  const std::vector<double> grad = error_gradient(mu, matrix);
  if (unknowns.empty()) {
    for (double g : grad) report.gradient_max = std::max(report.gradient_max, std::abs(g));
  } else {
    for (std::size_t u : unknowns)
      report.gradient_max = std::max(report.gradient_max, std::abs(grad[u]));
  }

  double total = 0.0;
  for (double v : mu) total += v;
  report.weight_bound_condition = true;
  report.hessian_dominant = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mu[i] < static_cast<double>(n - 1) * (total - mu[i]))) report.weight_bound_condition = false;
    const double diag = static_cast<double>(n - 1) / (mu[i] * mu[i]);
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off += 1.0 / (mu[i] * mu[j]);
    if (!(diag > off)) report.hessian_dominant = false;
  }

  const DenseMatrix h = stationary_hessian(mu);
  report.hessian_positive_definite = is_positive_definite(h);
  if (!unknowns.empty()) {
    DenseMatrix block(unknowns.size(), unknowns.size());
    for (std::size_t r = 0; r < unknowns.size(); ++r)
      for (std::size_t c = 0; c < unknowns.size(); ++c) block(r, c) = h(unknowns[r], unknowns[c]);
    report.unknown_block_positive_definite = is_positive_definite(block);
  }
  return report;
}

}  // namespace hre
