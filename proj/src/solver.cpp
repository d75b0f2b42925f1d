#include "hre/solver.hpp"

#include <cmath>

#include "hre/classic.hpp"
#include "hre/errors.hpp"

namespace hre {

namespace {

void require_base(double base) {
  if (!std::isfinite(base) || !(base > 1.0))
    throw ValidationError("logarithm base must be finite and greater than 1");
}

// Natural-log right-hand side of the geometric system.
DenseVector geometric_rhs(const HreProblem& problem) {
  const PcMatrix& m = problem.matrix();
  const auto& unknowns = problem.unknowns();
  DenseVector b(unknowns.size(), 0.0);
  for (std::size_t r = 0; r < unknowns.size(); ++r) {
    const std::size_t i = unknowns[r];
    double acc = 0.0;
    for (std::size_t j : unknowns)
      if (j != i) acc += std::log(m(i, j));
    for (const auto& [j, value] : problem.reference().known())
      acc += std::log(m(i, j)) + std::log(value);
    b[r] = acc;
  }
  return b;
}

std::vector<std::string> reciprocity_warnings(const PcMatrix& m) {
  if (is_reciprocal(m)) return {};
  return {non_reciprocal_warning(m)};
}

}  // namespace

ArithmeticSystem build_arithmetic_system(const HreProblem& problem) {
  const PcMatrix& m = problem.matrix();
  const auto& unknowns = problem.unknowns();
  const std::size_t k = unknowns.size();
  const double scale = 1.0 / static_cast<double>(m.size() - 1);

  DenseMatrix a(k, k);
  DenseVector b(k, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t i = unknowns[r];
    for (std::size_t c = 0; c < k; ++c)
      a(r, c) = r == c ? 1.0 : -scale * m(i, unknowns[c]);
    double acc = 0.0;
    for (const auto& [j, value] : problem.reference().known()) acc += m(i, j) * value;
    b[r] = scale * acc;
  }
  return {std::move(a), std::move(b), unknowns};
}

DenseMatrix geometric_system_matrix(std::size_t n, std::size_t unknown_count) {
  DenseMatrix a(unknown_count, unknown_count, -1.0);
  for (std::size_t r = 0; r < unknown_count; ++r) a(r, r) = static_cast<double>(n - 1);
  return a;
}

GeometricSystem build_geometric_system(const HreProblem& problem, double base) {
  require_base(base);
  DenseVector b = geometric_rhs(problem);
  const double ln_base = std::log(base);
  for (double& v : b) v /= ln_base;
  return {geometric_system_matrix(problem.size(), problem.unknown_count()),
          std::move(b), base, problem.unknowns()};
}

ArithmeticOutcome solve_arithmetic(const HreProblem& problem) {
  const ArithmeticSystem system = build_arithmetic_system(problem);
  const DenseVector x = solve_linear(system.a, system.b);

  ArithmeticOutcome out;
  out.raw.assign(problem.size(), 0.0);
  for (const auto& [j, value] : problem.reference().known()) out.raw[j] = value;
  out.feasible = true;
  for (std::size_t r = 0; r < x.size(); ++r) {
    out.raw[system.unknowns[r]] = x[r];
    if (!std::isfinite(x[r]) || x[r] <= 0.0) out.feasible = false;
  }
  if (out.feasible) out.priorities = normalize(out.raw);
  out.warnings = reciprocity_warnings(problem.matrix());
  return out;
}

GeometricSolution solve_geometric(const HreProblem& problem, double base) {
  require_base(base);
  const DenseMatrix a_hat =
      geometric_system_matrix(problem.size(), problem.unknown_count());
  DenseVector b = geometric_rhs(problem);

  DenseVector log_unknowns;
  try {
    log_unknowns = solve_linear(a_hat, b);
  } catch (const SingularMatrixError& e) {
    throw Error(std::string("internal invariant violated: geometric system reported singular: ") +
                e.what());
  }

  std::vector<double> values(problem.size(), 0.0);
  for (const auto& [j, value] : problem.reference().known()) values[j] = value;
  for (std::size_t r = 0; r < log_unknowns.size(); ++r)
    values[problem.unknowns()[r]] = std::exp(log_unknowns[r]);

  const double ln_base = std::log(base);
  for (double& v : log_unknowns) v /= ln_base;
  for (double& v : b) v /= ln_base;

  return {normalize(values), std::move(log_unknowns), std::move(b), base,
          reciprocity_warnings(problem.matrix())};
}

double geometric_residual(const PriorityVector& solution, const HreProblem& problem) {
  const PcMatrix& m = problem.matrix();
  const std::size_t n = m.size();
  if (solution.size() != n) throw ValidationError("solution length does not match matrix");
  const auto& mu = solution.values;
  double worst = 0.0;
  for (std::size_t j : problem.unknowns()) {
    double log_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) log_sum += std::log(m(j, i)) + std::log(mu[i]);
    const double mean = std::exp(log_sum / static_cast<double>(n - 1));
    worst = std::max(worst, std::abs(mu[j] - mean) / mu[j]);
  }
  return worst;
}

}  // namespace hre
