#include "isomlab/metric_space.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace isomlab;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool has(const std::vector<MetricViolation>& v, MetricAxiom a) {
  return std::any_of(v.begin(), v.end(), [a](const auto& x) { return x.axiom == a; });
}

}  // namespace

TEST_SUITE("metric_space") {

TEST_CASE("valid metrics pass") {
  CHECK(check_metric(mat({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})).empty());
  CHECK(check_metric(mat({{0}})).empty());
}

TEST_CASE("each axiom is reported") {
  CHECK(has(check_metric(mat({{0, 1}})), MetricAxiom::kNotSquare));
  CHECK(has(check_metric(mat({{0, -1}, {-1, 0}})), MetricAxiom::kNegative));
  CHECK(has(check_metric(mat({{1, 1}, {1, 0}})), MetricAxiom::kNonzeroDiagonal));
  CHECK(has(check_metric(mat({{0, 1}, {2, 0}})), MetricAxiom::kAsymmetry));
  CHECK(has(check_metric(mat({{0, 0}, {0, 0}})), MetricAxiom::kCoincidentPoints));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(has(check_metric(mat({{0, inf}, {inf, 0}})), MetricAxiom::kNotFinite));
}

TEST_CASE("triangle violation names the offending triple") {
  const auto v = check_metric(mat({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == MetricAxiom::kTriangle);
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 2);
  CHECK(v[0].via == 1);
  CHECK_THROWS_AS(validate_metric(mat({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}})), MetricError);
}

TEST_CASE("triangle slack is relative to the largest entry") {
  const double big = 1e6;
  CHECK(check_metric(mat({{0, big, 2 * big + 1e-7}, {big, 0, big}, {2 * big + 1e-7, big, 0}}))
            .empty());
  CHECK_FALSE(check_metric(mat({{0, 1, 2 + 1e-6}, {1, 0, 1}, {2 + 1e-6, 1, 0}})).empty());
}

TEST_CASE("diameter, eccentricity, scaling") {
  const auto x = validate_metric(mat({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  CHECK(x.diameter() == 2.0);
  CHECK(x.eccentricity(1) == 1.0);
  CHECK(x.scaled(3.0)(0, 2) == 6.0);
  CHECK_THROWS_AS(x.scaled(0.0), InvalidArgument);
  CHECK_THROWS_AS(x.scaled(-1.0), InvalidArgument);
}

TEST_CASE("distortion and codistortion of explicit maps") {
  const auto x = validate_metric(mat({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  const auto y = validate_metric(mat({{0, 2}, {2, 0}}));
  const std::vector<int> id{0, 1, 2};
  CHECK(distortion(id, x, x) == 0.0);
  // f collapses the middle point onto an end: |0 - 1| = 1, |2 - 2| = 0.
  const std::vector<int> f{0, 0, 1};
  CHECK(distortion(f, x, y) == doctest::Approx(1.0));
  MapPair maps{{0, 0, 1}, {0, 2}};
  // |d_Y(f(x), y) - d_X(x, g(y))| maxes at x=1,y=0 and x=1,y=1: |0-1| = 1.
  CHECK(codistortion(maps, x, y) == doctest::Approx(1.0));
}

TEST_CASE("hausdorff distance between subsets") {
  // Points 0, 1, 3 on a line.
  const auto z = validate_metric(mat({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}));
  const std::vector<int> a{0}, b{1, 2}, empty;
  CHECK(hausdorff_distance(a, b, z) == 3.0);
  CHECK(hausdorff_distance(b, b, z) == 0.0);
  CHECK_THROWS_AS(hausdorff_distance(a, empty, z), InvalidArgument);
}

TEST_CASE("isometry detection under permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testing::random_real_metric(5, rng);
    std::vector<int> order{0, 1, 2, 3, 4};
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(isometric(x, x.permuted(order)));
    CHECK_FALSE(isometric(x, x.scaled(1.5)));
  }
}

}
