#include <doctest.h>

#include <omp.h>

#include "hre/dense.hpp"
#include "hre/experiments.hpp"
#include "hre/solver.hpp"

using namespace hre;

namespace {

bool same_cells(const ExperimentResult& a, const ExperimentResult& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& x = a.cells[i];
    const auto& y = b.cells[i];
    if (x.n != y.n || x.sigma != y.sigma || x.trials != y.trials ||
        x.geometric_feasible_rate != y.geometric_feasible_rate ||
        x.arithmetic_feasible_rate != y.arithmetic_feasible_rate ||
        x.mean_koczkodaj != y.mean_koczkodaj || x.geometric_singular != y.geometric_singular ||
        x.arithmetic_singular != y.arithmetic_singular ||
        x.geometric_max_weight_error != y.geometric_max_weight_error ||
        x.arithmetic_max_weight_error != y.arithmetic_max_weight_error)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gen_consistent") {
  const PcMatrix fixture = consistent_from_weights({4, 2, 1});
  CHECK(fixture(0, 1) == 2.0);
  CHECK(fixture(0, 2) == 4.0);
  CHECK(fixture(2, 1) == 0.5);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = gen_consistent(6, seed);
    const auto b = gen_consistent(6, seed);
    CHECK(std::equal(a.matrix.entries().begin(), a.matrix.entries().end(), b.matrix.entries().begin()));
    CHECK(koczkodaj_index(a.matrix) <= 1e-12);
    for (double w : a.weights) {
      CHECK(w >= 1.0 / 9 - 1e-12);
      CHECK(w <= 9.0 + 1e-12);
    }
  }
}

TEST_CASE("perturb_reciprocal") {
  const auto draw = gen_consistent(5, 3);
  const PcMatrix same = perturb_reciprocal(draw.matrix, 0.0, 1);
  CHECK(std::equal(same.entries().begin(), same.entries().end(), draw.matrix.entries().begin()));

  for (double sigma : {0.1, 1.0, 3.0}) {
    const PcMatrix p = perturb_reciprocal(draw.matrix, sigma, 77);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(p(i, i) == 1.0);
      for (std::size_t j = 0; j < 5; ++j) {
        CHECK(std::abs(p(i, j) * p(j, i) - 1.0) <= 1e-12);
        CHECK(p(i, j) <= 9.0);
        CHECK(p(i, j) >= 1.0 / 9.0);
      }
    }
  }
  // fixture seed 77, sigma 1 on a consistent 5x5
  CHECK(koczkodaj_index(perturb_reciprocal(draw.matrix, 1.0, 77)) > 0.0);
  CHECK_THROWS(perturb_reciprocal(draw.matrix, -1.0, 1));
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  CHECK_NOTHROW(c.check());
  c.n_min = 2;
  CHECK_THROWS(c.check());
  c = {};
  c.n_max = 65;
  CHECK_THROWS(c.check());
  c = {};
  c.trials = 0;
  CHECK_THROWS(c.check());
  c = {};
  c.sigmas = {-0.1};
  CHECK_THROWS(c.check());
  c = {};
  c.scale_bound = 1.0;
  CHECK_THROWS(c.check());
  c = {};
  c.fixed_unknowns = 4;  // n_min = 4 leaves at most 3 unknowns
  CHECK_THROWS(c.check());
}

TEST_CASE("sigma = 0: both methods feasible and exact") {
  ExperimentConfig c;
  c.n_min = 3;
  c.n_max = 8;
  c.trials = 1000 / 6 + 1;
  c.sigmas = {0.0};
  const auto r = run_experiment(c);
  for (const auto& cell : r.cells) {
    CHECK(cell.geometric_feasible_rate == 1.0);
    CHECK(cell.arithmetic_feasible_rate == 1.0);
    CHECK(cell.geometric_max_weight_error <= 1e-9);
    CHECK(cell.arithmetic_max_weight_error <= 1e-9);
    CHECK(cell.mean_koczkodaj <= 1e-12);
  }
}

TEST_CASE("geometric feasibility is 1 in every cell") {
  ExperimentConfig c;
  c.n_min = 4;
  c.n_max = 9;
  c.trials = 1000;
  c.sigmas = {0.5, 1.0, 2.0};
  c.seed = 12345;
  const auto r = run_experiment(c);
  std::size_t arith_failures = 0;
  for (const auto& cell : r.cells) {
    CHECK(cell.geometric_feasible_rate == 1.0);
    CHECK(cell.geometric_singular == 0);
    CHECK(cell.arithmetic_feasible_rate >= 0.0);
    CHECK(cell.arithmetic_feasible_rate <= 1.0);
    arith_failures += cell.arithmetic_feasible_rate < 1.0 ? 1 : 0;
  }
  // at sigma = 2 on the 1-9 scale the arithmetic heuristic does break down
  CHECK(arith_failures > 0);
}

TEST_CASE("determinism: repeated, serial and parallel runs are bit-identical") {
  ExperimentConfig c;
  c.n_min = 4;
  c.n_max = 7;
  c.trials = 200;
  c.sigmas = {0.5, 2.0};
  c.seed = 99;
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto p1 = run_experiment(c, Execution::parallel);
  const auto p2 = run_experiment(c, Execution::parallel);
  omp_set_num_threads(saved);
  const auto s = run_experiment(c, Execution::serial);
  CHECK(same_cells(p1, p2));
  CHECK(same_cells(p1, s));
}

TEST_CASE("trend: arithmetic feasibility falls and inconsistency grows with sigma") {
  const std::vector<double> sigmas{0.25, 0.5, 1.0, 2.0};
  std::vector<double> arith(sigmas.size(), 0.0);
  std::vector<double> kocz(sigmas.size(), 0.0);
  const int seeds = 10;
  for (int s = 0; s < seeds; ++s) {
    ExperimentConfig c;
    c.n_min = 5;
    c.n_max = 9;
    c.trials = 100;
    c.sigmas = sigmas;
    c.seed = 700 + static_cast<std::uint64_t>(s);
    const auto r = run_experiment(c);
    for (const auto& cell : r.cells) {
      const std::size_t k = static_cast<std::size_t>(
          std::find(sigmas.begin(), sigmas.end(), cell.sigma) - sigmas.begin());
      arith[k] += cell.arithmetic_feasible_rate;
      kocz[k] += cell.mean_koczkodaj;
    }
  }
  for (std::size_t k = 1; k < sigmas.size(); ++k) {
    CHECK(arith[k] / (5.0 * seeds) <= arith[k - 1] / (5.0 * seeds) + 0.02);
    CHECK(kocz[k] / (5.0 * seeds) >= kocz[k - 1] / (5.0 * seeds) - 0.02);
  }
}

TEST_CASE("trial problems carry their ground truth") {
  const auto t = make_trial(6, 0.5, 2, 9.0, 4);
  CHECK(t.problem.unknown_count() == 2);
  for (const auto& [i, v] : t.problem.reference().known()) CHECK(v == t.weights[i]);
  const DenseMatrix inv = invert(geometric_system_matrix(6, 2));
  for (double v : inv.data()) CHECK(v >= -1e-12);
}
