#include "hre/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hre/errors.hpp"
#include "hre/solver.hpp"

namespace hre {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double max_relative_error(const std::vector<double>& values,
                          const std::vector<double>& truth,
                          const std::vector<std::size_t>& indices) {
  double worst = 0.0;
  for (std::size_t i : indices)
    worst = std::max(worst, std::abs(values[i] - truth[i]) / truth[i]);
  return worst;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1342543de82ef95ULL + 1));
}

PcMatrix consistent_from_weights(const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries[i * n + j] = i == j ? 1.0 : weights[i] / weights[j];
  return PcMatrix(n, std::move(entries));
}

ConsistentDraw gen_consistent(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw ValidationError("consistent matrix needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_weight(-std::log(9.0), std::log(9.0));
  std::vector<double> weights(n);
  for (double& w : weights) w = std::exp(log_weight(rng));
  PcMatrix m = consistent_from_weights(weights);
  return {std::move(m), std::move(weights)};
}

PcMatrix perturb_reciprocal(const PcMatrix& matrix, double sigma, std::uint64_t seed,
                            double scale_bound) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw ValidationError("perturbation sigma must be finite and nonnegative");
  if (!(scale_bound > 1.0)) throw ValidationError("scale bound must exceed 1");
  if (sigma == 0.0) return matrix;

  const std::size_t n = matrix.size();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> entries(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::clamp(matrix(i, j) * std::exp(noise(rng)),
                                  1.0 / scale_bound, scale_bound);
      entries[i * n + j] = v;
      entries[j * n + i] = 1.0 / v;
    }
  return PcMatrix(n, std::move(entries), matrix.labels());
}

void ExperimentConfig::check() const {
  if (n_min < 3 || n_max > 64 || n_min > n_max)
    throw ValidationError("n range must satisfy 3 <= n_min <= n_max <= 64");
  if (trials < 1) throw ValidationError("trials must be at least 1");
  if (sigmas.empty()) throw ValidationError("sigma list must not be empty");
  for (double s : sigmas)
    if (!(s >= 0.0) || !std::isfinite(s)) throw ValidationError("sigma must be finite and >= 0");
  if (!(scale_bound > 1.0) || !std::isfinite(scale_bound))
    throw ValidationError("scale bound must be finite and exceed 1");
  if (fixed_unknowns && (*fixed_unknowns < 1 || *fixed_unknowns > n_min - 1))
    throw ValidationError("fixed unknown count must lie in 1..n_min-1");
}

TrialProblem make_trial(std::size_t n, double sigma,
                        std::optional<std::size_t> fixed_unknowns,
                        double scale_bound, std::uint64_t seed) {
  ConsistentDraw draw = gen_consistent(n, derive_seed(seed, 0));
  PcMatrix noisy = perturb_reciprocal(draw.matrix, sigma, derive_seed(seed, 1), scale_bound);

  std::mt19937_64 rng(derive_seed(seed, 2));
  std::size_t k = 0;
  if (fixed_unknowns) {
    k = *fixed_unknowns;
  } else {
    std::uniform_int_distribution<std::size_t> pick(1, n - 1);
    k = pick(rng);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::map<std::size_t, double> known;
  for (std::size_t p = k; p < n; ++p) known.emplace(order[p], draw.weights[order[p]]);
  HreProblem problem(noisy, ReferenceAssignment(std::move(known)));
  return {std::move(noisy), std::move(draw.weights), std::move(problem)};
}

TrialOutcome run_trial(const TrialProblem& trial) {
  TrialOutcome out;
  out.koczkodaj = koczkodaj_index(trial.matrix, Execution::serial);
  const auto& unknowns = trial.problem.unknowns();

  try {
    const GeometricSolution geo = solve_geometric(trial.problem);
    out.geometric_feasible = std::all_of(
        geo.priorities.values.begin(), geo.priorities.values.end(),
        [](double v) { return std::isfinite(v) && v > 0.0; });
    out.geometric_weight_error = max_relative_error(geo.priorities.values, trial.weights, unknowns);
  } catch (const Error&) {
    out.geometric_error = true;
  }

  try {
    const ArithmeticOutcome arith = solve_arithmetic(trial.problem);
    out.arithmetic_feasible = arith.feasible;
    if (arith.feasible)
      out.arithmetic_weight_error = max_relative_error(arith.raw, trial.weights, unknowns);
  } catch (const SingularMatrixError&) {
    out.arithmetic_singular = true;
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config, Execution exec) {
  config.check();
  const std::size_t n_count = config.n_max - config.n_min + 1;
  const std::size_t cell_count = n_count * config.sigmas.size();
  const std::size_t total = cell_count * config.trials;

  std::vector<TrialOutcome> outcomes(total);
  auto run_one = [&](std::size_t t) {
    const std::size_t cell = t / config.trials;
    const std::size_t n = config.n_min + cell / config.sigmas.size();
    const double sigma = config.sigmas[cell % config.sigmas.size()];
    const TrialProblem trial = make_trial(n, sigma, config.fixed_unknowns,
                                          config.scale_bound, derive_seed(config.seed, t));
    outcomes[t] = run_trial(trial);
  };

  if (exec == Execution::parallel) {
    const auto total_signed = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long t = 0; t < total_signed; ++t) run_one(static_cast<std::size_t>(t));
  } else {
    for (std::size_t t = 0; t < total; ++t) run_one(t);
  }

  ExperimentResult result{config, {}};
  result.cells.reserve(cell_count);
  for (std::size_t cell = 0; cell < cell_count; ++cell) {
    ExperimentCell c;
    c.n = config.n_min + cell / config.sigmas.size();
    c.sigma = config.sigmas[cell % config.sigmas.size()];
    c.trials = config.trials;
    std::size_t geo_ok = 0;
    std::size_t arith_ok = 0;
    double kocz_sum = 0.0;
    for (std::size_t t = cell * config.trials; t < (cell + 1) * config.trials; ++t) {
      const TrialOutcome& o = outcomes[t];
      geo_ok += o.geometric_feasible ? 1 : 0;
      arith_ok += o.arithmetic_feasible ? 1 : 0;
      c.geometric_singular += o.geometric_error ? 1 : 0;
      c.arithmetic_singular += o.arithmetic_singular ? 1 : 0;
      kocz_sum += o.koczkodaj;
      if (o.geometric_feasible)
        c.geometric_max_weight_error = std::max(c.geometric_max_weight_error, o.geometric_weight_error);
      if (o.arithmetic_feasible)
        c.arithmetic_max_weight_error = std::max(c.arithmetic_max_weight_error, o.arithmetic_weight_error);
    }
    const auto trials = static_cast<double>(config.trials);
    c.geometric_feasible_rate = static_cast<double>(geo_ok) / trials;
    c.arithmetic_feasible_rate = static_cast<double>(arith_ok) / trials;
    c.mean_koczkodaj = kocz_sum / trials;
    result.cells.push_back(c);
  }
  return result;
}

}  // namespace hre
