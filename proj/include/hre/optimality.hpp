#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hre/dense.hpp"
#include "hre/pc_matrix.hpp"

namespace hre {

/// Sum over all (i, j) of (ln m_ij - ln(mu_i / mu_j))^2.
double error_function(std::span<const double> mu, const PcMatrix& matrix);

/// Analytic partial derivatives of error_function with respect to each mu_i,
/// in the form that assumes m_ij = 1 / m_ji. Throws NonReciprocalError when
/// the matrix fails the reciprocity check.
std::vector<double> error_gradient(std::span<const double> mu,
                                   const PcMatrix& matrix);

/// Second-derivative matrix at a stationary point: 4 (n - 1) / mu_i^2 on the
/// diagonal, -4 / (mu_i mu_j) elsewhere.
DenseMatrix stationary_hessian(std::span<const double> mu);

struct OptimalityReport {
  double error_value = 0.0;
  /// Max |partial| over the free coordinates (all of them when no unknown
  /// set is given).
  double gradient_max = 0.0;
  /// mu_i < (n - 1) * sum_{j != i} mu_j for every i.
  bool weight_bound_condition = false;
  /// (n - 1) / mu_i^2 > sum_{j != i} 1 / (mu_i mu_j) for every i.
  bool hessian_dominant = false;
  bool hessian_positive_definite = false;
  /// Positive definiteness of the Hessian block over the unknown
  /// coordinates; present when the unknown set is known.
  std::optional<bool> unknown_block_positive_definite;
};

/// Throws NonReciprocalError for a non-reciprocal matrix and
/// ValidationError for a length mismatch or nonpositive entry.
OptimalityReport optimality_report(std::span<const double> mu,
                                   const PcMatrix& matrix,
                                   std::span<const std::size_t> unknowns = {});

}  // namespace hre
