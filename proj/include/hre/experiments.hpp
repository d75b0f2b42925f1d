#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hre/execution.hpp"
#include "hre/pc_matrix.hpp"

namespace hre {

/// Consistent matrix m_ij = w_i / w_j from weights drawn log-uniformly in
/// [1/9, 9]. Deterministic in `seed`.
struct ConsistentDraw {
  PcMatrix matrix;
  std::vector<double> weights;
};
ConsistentDraw gen_consistent(std::size_t n, std::uint64_t seed);

/// Same construction from caller-supplied positive weights.
PcMatrix consistent_from_weights(const std::vector<double>& weights);

/// Multiplies each upper-triangle entry by exp(g), g ~ N(0, sigma^2), clamps
/// to [1/scale_bound, scale_bound], and writes exact reciprocals below the
/// diagonal. sigma == 0 returns the input unchanged, without clamping.
PcMatrix perturb_reciprocal(const PcMatrix& matrix, double sigma,
                            std::uint64_t seed, double scale_bound = 9.0);

/// Counter-based seed derivation (splitmix64 finalizer over the pair).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct ExperimentConfig {
  std::size_t n_min = 4;
  std::size_t n_max = 9;
  /// Unknown count per trial; nullopt draws it uniformly from 1..n-1.
  std::optional<std::size_t> fixed_unknowns;
  /// Trials per (n, sigma) cell.
  std::size_t trials = 100;
  std::vector<double> sigmas{0.5, 1.0, 2.0};
  double scale_bound = 9.0;
  std::uint64_t seed = 1;

  /// Throws ValidationError when a field is out of range.
  void check() const;
};

/// One randomized reference-set problem with its ground-truth weights.
struct TrialProblem {
  PcMatrix matrix;
  std::vector<double> weights;
  HreProblem problem;
};
TrialProblem make_trial(std::size_t n, double sigma,
                        std::optional<std::size_t> fixed_unknowns,
                        double scale_bound, std::uint64_t seed);

struct TrialOutcome {
  bool geometric_feasible = false;
  bool geometric_error = false;
  bool arithmetic_feasible = false;
  bool arithmetic_singular = false;
  double koczkodaj = 0.0;
  /// Max relative deviation from the generating weights over unknowns;
  /// only meaningful when the matching method was feasible.
  double geometric_weight_error = 0.0;
  double arithmetic_weight_error = 0.0;
};
TrialOutcome run_trial(const TrialProblem& trial);

struct ExperimentCell {
  std::size_t n = 0;
  double sigma = 0.0;
  std::size_t trials = 0;
  double geometric_feasible_rate = 0.0;
  double arithmetic_feasible_rate = 0.0;
  double mean_koczkodaj = 0.0;
  std::size_t geometric_singular = 0;
  std::size_t arithmetic_singular = 0;
  double geometric_max_weight_error = 0.0;
  double arithmetic_max_weight_error = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentCell> cells;  // n-major, then sigma in config order
};

/// Runs every cell. Trial outcomes are stored by global trial index and
/// reduced in that order, so serial and parallel runs are bit-identical.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                Execution exec = Execution::parallel);

}  // namespace hre
