#include <doctest.h>

#include <random>

#include "hre/errors.hpp"
#include "hre/experiments.hpp"
#include "hre/io.hpp"
#include "hre/pc_matrix.hpp"
#include "oracles.hpp"

using namespace hre;

namespace {

PcMatrix consistent421() {
  return PcMatrix::from_rows({{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}});
}

PcMatrix inconsistent_245() {
  return PcMatrix::from_rows({{1, 2, 5}, {0.5, 1, 2}, {0.2, 0.5, 1}});
}

PcMatrix load(const char* name) { return io::parse_matrix_csv(io::read_file(oracle::fixture(name))); }

}  // namespace

TEST_CASE("construction rejects nonpositive and non-finite entries with the cell") {
  try {
    PcMatrix::from_rows({{1, 2, -1}, {0.5, 1, 2}, {1, 0.5, 1}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.cell().has_value());
    CHECK(e.cell()->first == 0);
    CHECK(e.cell()->second == 2);
  }
  CHECK_THROWS_AS(PcMatrix::from_rows({{1, std::nan("")}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(PcMatrix::from_rows({{1, 0.0}, {1, 1}}), ValidationError);
}

TEST_CASE("diagonal must equal one") {
  CHECK_THROWS_AS(PcMatrix::from_rows({{1, 2}, {0.5, 1.001}}), ValidationError);
  CHECK_NOTHROW(PcMatrix::from_rows({{1, 2}, {0.5, 1 + 1e-12}}));
}

TEST_CASE("validate: consistent, inconsistent, non-reciprocal") {
  const auto c = validate(consistent421());
  CHECK(c.reciprocal);
  CHECK(c.consistent);
  REQUIRE(c.koczkodaj);
  CHECK(*c.koczkodaj == doctest::Approx(0.0));

  const auto i = validate(inconsistent_245());
  CHECK(i.reciprocal);
  CHECK_FALSE(i.consistent);

  const auto ex2 = validate(load("example2_matrix.csv"));
  CHECK_FALSE(ex2.reciprocal);
  CHECK_FALSE(ex2.consistent);
  CHECK_FALSE(ex2.koczkodaj.has_value());
  bool saw_13 = false;
  for (const auto& v : ex2.violations) {
    if (v.i == 0 && v.j == 2) {
      saw_13 = true;
      CHECK(v.product == doctest::Approx(1.333 * 1.333));
    }
  }
  CHECK(saw_13);
}

TEST_CASE("koczkodaj index values") {
  CHECK(koczkodaj_index(consistent421()) == 0.0);
  // Single triad: min(|1 - 5/4|, |1 - 4/5|) = 0.2.
  CHECK(koczkodaj_index(inconsistent_245()) == doctest::Approx(0.2).epsilon(1e-12));
  // Frozen from exhaustive triad enumeration in exact rationals: 109/144.
  const PcMatrix ex1 = load("example1_matrix.csv");
  CHECK(koczkodaj_index(ex1) == doctest::Approx(109.0 / 144.0).epsilon(1e-12));
  CHECK(koczkodaj_index(ex1) == oracle::koczkodaj_brute_force(ex1));
}

TEST_CASE("koczkodaj index error paths") {
  CHECK_THROWS_AS(koczkodaj_index(PcMatrix::from_rows({{1, 3}, {1.0 / 3, 1}})), UndefinedIndexError);
  CHECK_THROWS_AS(koczkodaj_index(load("example2_matrix.csv")), NonReciprocalError);
  const auto r = validate(PcMatrix::from_rows({{1, 3}, {1.0 / 3, 1}}));
  CHECK(r.reciprocal);
  CHECK_FALSE(r.koczkodaj.has_value());
}

TEST_CASE("koczkodaj reduced form equals ordered-triad enumeration exactly on dyadic matrices") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 4);
    const PcMatrix m = oracle::dyadic_reciprocal(n, rng);
    const double brute = oracle::koczkodaj_brute_force(m);
    CHECK(koczkodaj_index(m, Execution::serial) == brute);
    CHECK(koczkodaj_index(m, Execution::parallel) == brute);
  }
}

TEST_CASE("koczkodaj reduced form tracks enumeration on general reciprocal matrices") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const PcMatrix m = oracle::random_reciprocal(3 + static_cast<std::size_t>(t % 4), rng);
    CHECK(koczkodaj_index(m) == doctest::Approx(oracle::koczkodaj_brute_force(m)).epsilon(1e-12));
  }
}

TEST_CASE("koczkodaj invariant under reciprocal transpose") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const PcMatrix m = oracle::random_reciprocal(3 + static_cast<std::size_t>(t % 5), rng);
    CHECK(koczkodaj_index(m.reciprocal_transpose()) == doctest::Approx(koczkodaj_index(m)).epsilon(1e-12));
  }
}

TEST_CASE("generated consistent matrices validate as consistent") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto draw = gen_consistent(3 + seed % 8, seed);
    const auto r = validate(draw.matrix);
    CHECK(r.consistent);
    REQUIRE(r.koczkodaj);
    CHECK(*r.koczkodaj <= 1e-9);
  }
}

TEST_CASE("serial and parallel koczkodaj agree bit for bit on large input") {
  std::mt19937_64 rng(7);
  const PcMatrix m = oracle::random_reciprocal(60, rng);
  CHECK(koczkodaj_index(m, Execution::serial) == koczkodaj_index(m, Execution::parallel));
}

TEST_CASE("normalize") {
  const auto a = normalize(std::vector<double>{1, 1, 1, 1});
  for (double v : a.normalized) CHECK(v == doctest::Approx(0.25));

  const auto b = normalize(std::vector<double>{2.16, 5, 7, 2.514, 2.08});
  const double expected[] = {0.115, 0.267, 0.373, 0.134, 0.111};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(b.normalized[i] - expected[i]) <= 0.001);

  const auto c = normalize(std::vector<double>{3, 6});
  CHECK(c.normalized[0] == doctest::Approx(1.0 / 3));
  CHECK(c.normalized[1] == doctest::Approx(2.0 / 3));

  CHECK_THROWS_AS(normalize(std::vector<double>{1, 0}), ValidationError);
  CHECK_THROWS_AS(normalize(std::vector<double>{1, -2}), ValidationError);
}

TEST_CASE("normalize properties: unit sum, ratio preservation, idempotence") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(2 + static_cast<std::size_t>(t % 9));
    for (double& x : v) x = std::exp(u(rng));
    const PriorityVector p = normalize(v);
    double sum = 0.0;
    for (double x : p.normalized) sum += x;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        CHECK(oracle::rel_diff(p.normalized[i] / p.normalized[j], v[i] / v[j]) <= 1e-12);
    const PriorityVector again = normalize(p.normalized);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(std::abs(again.normalized[i] - p.normalized[i]) <= 1e-12);
  }
}

TEST_CASE("reference assignment and problem ordering") {
  CHECK_THROWS_AS(ReferenceAssignment({}), ValidationError);
  CHECK_THROWS_AS(ReferenceAssignment({{0, -1.0}}), ValidationError);
  CHECK_THROWS_AS(ReferenceAssignment({{0, std::numeric_limits<double>::infinity()}}), ValidationError);

  const PcMatrix m = consistent421();
  CHECK_THROWS_AS(HreProblem(m, ReferenceAssignment({{3, 1.0}})), ValidationError);
  CHECK_THROWS_AS(HreProblem(m, ReferenceAssignment({{0, 1.0}, {1, 1.0}, {2, 1.0}})), ValidationError);

  const HreProblem p(m, ReferenceAssignment({{1, 2.0}}));
  CHECK(p.unknowns() == std::vector<std::size_t>{0, 2});
  CHECK(p.knowns() == std::vector<std::size_t>{1});
  CHECK(p.order() == std::vector<std::size_t>{0, 2, 1});
  for (std::size_t i = 0; i < 3; ++i) CHECK(p.order()[p.position_of()[i]] == i);
}
