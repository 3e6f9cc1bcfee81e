#include "isomlab/embedding.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace isomlab;

namespace {

// Floor for the best max-residual placement of the 4-point unit equilateral
// space in the Euclidean plane. Fixes p0 at the origin and p1 on the positive
// x axis, scans the others over a grid of spacing h; snapping any placement
// to the grid moves each distance by at most h * sqrt(2).
double equilateral4_plane_floor(double h) {
  std::vector<Eigen::Vector2d> grid;
  for (double x = -1.3; x <= 1.3 + 1e-9; x += h)
    for (double y = -1.3; y <= 1.3 + 1e-9; y += h) grid.emplace_back(x, y);
  double best = 0.5;
  for (double t = 0.5; t <= 1.5 + 1e-9; t += h / 2) {
    const Eigen::Vector2d p1(t, 0);
    if (std::abs(t - 1) >= best) continue;
    std::vector<const Eigen::Vector2d*> seconds;
    for (const auto& p : grid) {
      const double r = std::max({std::abs(t - 1), std::abs(p.norm() - 1),
                                 std::abs((p - p1).norm() - 1)});
      if (r < best) seconds.push_back(&p);
    }
    for (const auto* p2 : seconds) {
      if (p2->y() < 0) continue;
      const double r2 = std::max({std::abs(t - 1), std::abs(p2->norm() - 1),
                                  std::abs((*p2 - p1).norm() - 1)});
      for (const auto* p3 : seconds) {
        const double r = std::max(r2, std::abs((*p3 - *p2).norm() - 1));
        best = std::min(best, std::max(r, std::max(std::abs(p3->norm() - 1),
                                                   std::abs((*p3 - p1).norm() - 1))));
      }
    }
  }
  return best - h * std::sqrt(2.0);
}

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("Frechet placement is exact") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = testing::random_real_metric(2 + trial % 7, rng);
    const auto r = frechet_embed(s);
    CHECK(r.placement.cols() == s.size());
    CHECK(r.residual <= 1e-12);
    CHECK(placement_residual(s, NormDescriptor::linf(s.size()), r.placement) == r.residual);
  }
}

TEST_CASE("solver keeps the Frechet placement in l_inf^n") {
  std::mt19937_64 rng(13);
  EmbeddingOptions opt;
  opt.restarts = 2;
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testing::random_real_metric(3 + trial % 5, rng);
    CHECK(embed_finite(s, NormDescriptor::linf(s.size()), opt).residual <= 1e-12);
  }
}

TEST_CASE("a Euclidean triangle embeds in the plane") {
  Matrix d(3, 3);
  d << 0, 3, 4, 3, 0, 5, 4, 5, 0;
  const auto r = embed_finite(validate_metric(d), NormDescriptor::l2(2));
  CHECK(r.residual <= 1e-9);
  CHECK(r.certified_isometry());
  CHECK(r.verdict() == "embeddable");
}

TEST_CASE("four equidistant points do not fit in the Euclidean plane") {
  const double floor = equilateral4_plane_floor(0.02);
  CHECK(floor > 0.1);
  EmbeddingOptions opt;
  opt.restarts = 100;
  const auto r = embed_finite(equilateral_space(4, 1.0), NormDescriptor::l2(2), opt);
  CHECK(r.residual >= floor);
  // The square with side 2 / (1 + sqrt 2) balances sides against diagonals.
  CHECK(r.residual <= 1 - 2 / (1 + std::sqrt(2.0)) + 1e-4);
  CHECK(r.verdict() == "not-found");
}

TEST_CASE("cube vertices") {
  const auto v = cube_vertices(3, 8, 2.0);
  REQUIRE(v.size() == 8);
  CHECK(v[0] == Vector::Zero(3));
  CHECK(v[7] == Vector::Constant(3, 2.0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      CHECK(NormDescriptor::linf(3)(v[i] - v[j]) == 2.0);
}

TEST_CASE("equilateral search") {
  for (int n : {2, 3, 4}) {
    const auto s = equilateral_search(NormDescriptor::linf(n), 1 << n, 1.0);
    CHECK(s.constructed);
    CHECK(s.residual <= 1e-9);
  }
  EmbeddingOptions opt;
  opt.restarts = 20;
  const auto over = equilateral_search(NormDescriptor::linf(2), 5, 1.0, opt);
  CHECK_FALSE(over.constructed);
  CHECK(over.residual >= 1e-3);
  // l1 in the plane also has 4-point equilateral sets (a diamond).
  CHECK(equilateral_search(NormDescriptor::l1(2), 4, 1.0, opt).residual <= 1e-6);
}

TEST_CASE("net union instance is a metric with the origin first") {
  const auto s = net_union_instance(NormDescriptor::l1(2), 4, 0);
  CHECK(s.labels().front() == "origin");
  CHECK(check_metric(s.distances(), 1e-9).empty());
  for (int i = 1; i < s.size(); ++i) CHECK(s(0, i) == doctest::Approx(1.0));
}

TEST_CASE("more restarts never raise the residual") {
  std::mt19937_64 rng(21);
  const auto s = testing::random_real_metric(5, rng);
  double last = std::numeric_limits<double>::infinity();
  for (int k : {1, 2, 4, 8, 16}) {
    EmbeddingOptions opt;
    opt.restarts = k;
    const double r = embed_finite(s, NormDescriptor::l2(2), opt).residual;
    CHECK(r <= last);
    last = r;
  }
}

TEST_CASE("relabeling the points leaves the best residual unchanged") {
  EmbeddingOptions opt;
  opt.restarts = 32;
  const auto s = equilateral_space(4, 1.0);
  Matrix d(4, 4);
  d << 0, 1, 1, 1.5, 1, 0, 1.2, 1, 1, 1.2, 0, 1, 1.5, 1, 1, 0;
  for (const auto& x : {s, validate_metric(d)}) {
    const std::vector<int> order{2, 0, 3, 1};
    const double a = embed_finite(x, NormDescriptor::l2(2), opt).residual;
    const double b = embed_finite(x.permuted(order), NormDescriptor::l2(2), opt).residual;
    CHECK(std::abs(a - b) <= 1e-9);
  }
}

TEST_CASE("a circle net does not fit on the line") {
  const auto s = net_union_instance(NormDescriptor::l2(2), 4, 0);
  EmbeddingOptions opt;
  opt.restarts = 32;
  const auto r = embed_finite(s, NormDescriptor::l2(1), opt);
  CHECK(r.residual >= 0.1);
  CHECK(r.verdict() == "not-found");
}

}
