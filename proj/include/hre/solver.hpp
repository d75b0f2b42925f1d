#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hre/dense.hpp"
#include "hre/pc_matrix.hpp"

namespace hre {

/// Linear system for the arithmetic-mean heuristic over the unknown
/// concepts: a(i, i) = 1, a(i, j) = -m_ij / (n - 1), and
/// b_i = sum over known j of m_ij * mu_j / (n - 1).
struct ArithmeticSystem {
  DenseMatrix a;
  DenseVector b;
  std::vector<std::size_t> unknowns;  // row r solves for concept unknowns[r]
};

/// Log-space system for the geometric-mean heuristic. a_hat has n - 1 on the
/// diagonal and -1 elsewhere; b_i = sum over unknown j != i of log m_ij plus
/// log g_i with g_i = prod over known j of m_ij * mu_j. Logarithms use
/// `base`.
struct GeometricSystem {
  DenseMatrix a_hat;
  DenseVector b;
  double base;
  std::vector<std::size_t> unknowns;
};

ArithmeticSystem build_arithmetic_system(const HreProblem& problem);

/// Throws ValidationError unless base > 1 and finite.
GeometricSystem build_geometric_system(const HreProblem& problem,
                                       double base = 10.0);

/// The a_hat block alone; it depends only on n and the unknown count.
DenseMatrix geometric_system_matrix(std::size_t n, std::size_t unknown_count);

struct ArithmeticOutcome {
  /// False when some computed priority is not strictly positive.
  bool feasible = false;
  /// Full vector in original order, known values included.
  std::vector<double> raw;
  /// Present only when feasible.
  std::optional<PriorityVector> priorities;
  std::vector<std::string> warnings;
};

/// Solves the arithmetic system. Singular systems raise SingularMatrixError;
/// a nonpositive result is reported through `feasible`, not thrown.
ArithmeticOutcome solve_arithmetic(const HreProblem& problem);

struct GeometricSolution {
  PriorityVector priorities;
  /// Log of each unknown priority in `base`, in problem.unknowns() order.
  DenseVector log_unknowns;
  /// Right-hand side in `base`, matching log_unknowns.
  DenseVector b;
  double base = 10.0;
  std::vector<std::string> warnings;
};

/// Solves the geometric system in natural log and exponentiates. The base
/// only changes the reported log_unknowns and b. The result is always
/// strictly positive.
GeometricSolution solve_geometric(const HreProblem& problem,
                                  double base = 10.0);

/// Largest relative gap, over unknown j, between mu_j and the weighted
/// geometric mean of m_ji * mu_i over i != j.
double geometric_residual(const PriorityVector& solution,
                          const HreProblem& problem);

}  // namespace hre
