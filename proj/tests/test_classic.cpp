#include <doctest.h>

#include <random>

#include "hre/classic.hpp"
#include "hre/experiments.hpp"
#include "hre/io.hpp"
#include "oracles.hpp"

using namespace hre;

namespace {
PcMatrix load(const char* name) { return io::parse_matrix_csv(io::read_file(oracle::fixture(name))); }
}  // namespace

TEST_CASE("ev and gm on the consistent (4, 2, 1) matrix") {
  const PcMatrix m = load("consistent3.csv");
  const auto ev = ev_method(m).priorities.normalized;
  const auto gm = gm_method(m).priorities.normalized;
  const double expected[] = {4.0 / 7, 2.0 / 7, 1.0 / 7};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(ev[i] - expected[i]) <= 1e-6);
    CHECK(std::abs(gm[i] - expected[i]) <= 1e-9);
  }
}

TEST_CASE("uniform matrix gives the uniform ranking") {
  const PcMatrix m = load("uniform4.csv");
  for (double v : ev_method(m).priorities.normalized) CHECK(v == doctest::Approx(0.25));
  for (double v : gm_method(m).priorities.normalized) CHECK(v == doctest::Approx(0.25));
}

TEST_CASE("ev on Example I matches the eigen oracle") {
  const PcMatrix m = load("example1_matrix.csv");
  const auto g = oracle::grid(m);
  const auto v = oracle::eigenvector_for(g, oracle::largest_real_eigenvalue(g));
  const auto ev = ev_method(m).priorities.normalized;
  // also frozen from an independent dense eigen decomposition
  const double frozen[] = {0.12122205, 0.2751138, 0.35709207, 0.13159441, 0.11497767};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(ev[i] == doctest::Approx(v[i]).epsilon(1e-8));
    CHECK(ev[i] == doctest::Approx(frozen[i]).epsilon(1e-7));
  }
}

TEST_CASE("gm on Example I matches direct row products") {
  const PcMatrix m = load("example1_matrix.csv");
  std::vector<double> p(5);
  double sum = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < 5; ++j) prod *= m(i, j);
    p[i] = std::pow(prod, 0.2);
    sum += p[i];
  }
  const auto gm = gm_method(m).priorities.normalized;
  for (std::size_t i = 0; i < 5; ++i) CHECK(gm[i] == doctest::Approx(p[i] / sum).epsilon(1e-12));
  CHECK(gm[0] == doctest::Approx(0.11563121).epsilon(1e-7));
}

TEST_CASE("ev and gm agree on consistent matrices") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto draw = gen_consistent(2 + seed % 10, seed);
    const auto ev = ev_method(draw.matrix).priorities.normalized;
    const auto gm = gm_method(draw.matrix).priorities.normalized;
    for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] - gm[i]) <= 1e-8);
  }
}

TEST_CASE("both methods are strictly positive on arbitrary positive input") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const PcMatrix m = oracle::random_positive(3 + static_cast<std::size_t>(t % 6), rng);
    const auto ev = ev_method(m);
    const auto gm = gm_method(m);
    for (double v : ev.priorities.values) CHECK(v > 0.0);
    for (double v : gm.priorities.values) CHECK(v > 0.0);
    CHECK_FALSE(ev.warnings.empty());
  }
}

TEST_CASE("gm responds monotonically to scaling one concept") {
  std::mt19937_64 rng(23);
  const PcMatrix base = oracle::random_reciprocal(6, rng);
  const std::size_t target = 2;
  double previous = 0.0;
  std::vector<std::size_t> reference_order;
  for (double factor : {0.5, 1.0, 2.0, 4.0}) {
    std::vector<double> e(base.entries().begin(), base.entries().end());
    for (std::size_t j = 0; j < 6; ++j) {
      if (j == target) continue;
      e[target * 6 + j] *= factor;
      e[j * 6 + target] /= factor;
    }
    const auto p = gm_method(PcMatrix(6, e)).priorities.values;
    CHECK(p[target] > previous);
    previous = p[target];
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < 6; ++i)
      if (i != target) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return p[a] > p[b]; });
    if (reference_order.empty()) reference_order = order;
    CHECK(order == reference_order);
  }
}
