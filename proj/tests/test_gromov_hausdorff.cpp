#include "isomlab/gromov_hausdorff.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace isomlab;

namespace {

FiniteMetricSpace point() { return validate_metric(Matrix::Zero(1, 1)); }

FiniteMetricSpace pair(double a) {
  Matrix d(2, 2);
  d << 0, a, a, 0;
  return validate_metric(d);
}

}  // namespace

TEST_SUITE("gromov_hausdorff") {

TEST_CASE("point against a two-point space") {
  const auto x = point();
  const auto y = pair(2.0);
  CHECK(gh_exact_maps(x, y).value == 1.0);
  CHECK(gh_exact_correspondences(x, y).value == 1.0);
  CHECK(gh_branch_and_bound(x, y).value == 1.0);
}

TEST_CASE("closed forms on small grids") {
  for (double a = 0.5; a <= 5.0; a += 0.5)
    for (double b = 0.5; b <= 5.0; b += 0.5)
      CHECK(gh_branch_and_bound(pair(a), pair(b)).value == doctest::Approx(std::abs(a - b) / 2));
  for (const auto& x : testing::all_small_integer_metrics())
    CHECK(gh_branch_and_bound(x, point()).value == x.diameter() / 2);
}

TEST_CASE("three methods agree with the relation oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = testing::random_integer_metric(1 + trial % 4, rng);
    const auto y = testing::random_integer_metric(1 + (trial / 4) % 4, rng);
    const double want = testing::oracle_gh(x, y);
    CHECK(gh_exact_maps(x, y).value == doctest::Approx(want).epsilon(1e-12));
    CHECK(gh_exact_correspondences(x, y).value == doctest::Approx(want).epsilon(1e-12));
    CHECK(gh_branch_and_bound(x, y).value == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("witnesses realize the reported value") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = testing::random_real_metric(4, rng);
    const auto y = testing::random_real_metric(3, rng);
    for (const auto& r : {gh_exact_maps(x, y), gh_exact_correspondences(x, y),
                          gh_branch_and_bound(x, y)}) {
      Correspondence c{r.witness_pairs()};
      CHECK_NOTHROW(check_correspondence(c, x.size(), y.size()));
      CHECK(correspondence_distortion(c, x, y) / 2 == doctest::Approx(r.value));
    }
  }
}

TEST_CASE("lower bound never exceeds the exact value") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = testing::random_integer_metric(1 + trial % 4, rng);
    const auto y = testing::random_integer_metric(1 + (trial / 3) % 4, rng);
    CHECK(gh_lower_bound(x, y) <= testing::oracle_gh(x, y) + 1e-12);
  }
  // Two points at distance 1 against distances (1, 2, 2): the exact value
  // is 1/2.
  Matrix d(3, 3);
  d << 0, 1, 2, 1, 0, 2, 2, 2, 0;
  const auto y = validate_metric(d);
  CHECK(testing::oracle_gh(pair(1.0), y) == 0.5);
  CHECK(gh_lower_bound(pair(1.0), y) <= 0.5);
}

TEST_CASE("brute force refuses oversized instances") {
  std::mt19937_64 rng(1);
  const auto x = testing::random_real_metric(9, rng);
  GHBudget tiny{1e3, 1e3};
  CHECK_THROWS_AS(gh_exact_maps(x, x, tiny), BudgetExceeded);
  CHECK_THROWS_AS(gh_exact_correspondences(x, x, tiny), BudgetExceeded);
}

TEST_CASE("exhausted node budget returns an ordered bracket") {
  std::mt19937_64 rng(8);
  const auto x = testing::random_real_metric(9, rng);
  const auto y = testing::random_real_metric(9, rng);
  BranchAndBoundOptions opt;
  opt.node_budget = 50;
  const auto r = gh_branch_and_bound(x, y, opt);
  CHECK(r.lower_bound <= r.upper_bound);
  CHECK(r.value == r.upper_bound);
  if (!r.exact) CHECK(r.lower_bound < r.upper_bound);
  const auto full = gh_branch_and_bound(x, y);
  REQUIRE(full.exact);
  CHECK(r.lower_bound <= full.value + 1e-12);
  CHECK(full.value <= r.upper_bound + 1e-12);
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = testing::random_real_metric(7, rng);
    const auto y = testing::random_real_metric(6, rng);
    BranchAndBoundOptions one, four;
    four.threads = 4;
    const auto a = gh_branch_and_bound(x, y, one);
    const auto b = gh_branch_and_bound(x, y, four);
    CHECK(a.value == b.value);
    CHECK(a.witness_pairs() == b.witness_pairs());
  }
}

TEST_CASE("metric properties on random triples") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = testing::random_real_metric(3 + trial % 3, rng);
    const auto y = testing::random_real_metric(2 + trial % 4, rng);
    const auto z = testing::random_real_metric(4, rng);
    const double xy = gh_branch_and_bound(x, y).value;
    CHECK(xy == gh_branch_and_bound(y, x).value);
    CHECK(gh_branch_and_bound(x, x).value == 0.0);
    CHECK(xy <= gh_branch_and_bound(x, z).value + gh_branch_and_bound(z, y).value + 1e-12);
  }
}

TEST_CASE("method names") {
  CHECK(to_string(GHMethod::kBruteForceMaps) == "brute-force-maps");
  CHECK(to_string(GHMethod::kBranchAndBound) == "branch-and-bound");
}

}
