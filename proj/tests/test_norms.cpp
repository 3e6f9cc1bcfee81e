#include "isomlab/norms.hpp"
#include "isomlab/sphere_net.hpp"

#include <doctest.h>

#include <cmath>

using namespace isomlab;

TEST_SUITE("norms") {

TEST_CASE("lp values") {
  Vector v(3);
  v << 3, -4, 0;
  CHECK(NormDescriptor::l1(3)(v) == 7.0);
  CHECK(NormDescriptor::l2(3)(v) == 5.0);
  CHECK(NormDescriptor::linf(3)(v) == 4.0);
  CHECK(NormDescriptor::lp(3, 3.0)(v) == doctest::Approx(std::cbrt(27.0 + 64.0)));
  CHECK_THROWS_AS(NormDescriptor::l2(2)(v), InvalidArgument);
  CHECK_THROWS_AS(NormDescriptor::lp(2, 0.5), InvalidArgument);
}

TEST_CASE("polytope norms need spanning functionals") {
  Matrix f(2, 2);
  f << 1, 1, 2, 2;
  CHECK_THROWS_AS(NormDescriptor::polytope(f), InvalidArgument);
  f << 1, 0, 0, 1;
  const auto n = NormDescriptor::polytope(f);
  Vector v(2);
  v << -2, 1;
  CHECK(n(v) == 2.0);
}

TEST_CASE("product norm folds the base norm into the plane") {
  const auto w = NormDescriptor::product(NormDescriptor::l1(2), NormDescriptor::l2(2));
  CHECK(w.dim() == 3);
  Vector v(3);
  v << 1, 2, 4;  // (||(1,2)||_1, 4) = (3, 4)
  CHECK(w(v) == 5.0);
  CHECK_THROWS_AS(NormDescriptor::product(NormDescriptor::l1(2), NormDescriptor::l2(3)),
                  InvalidArgument);
}

TEST_CASE("shorthand parsing") {
  CHECK(parse_norm_shorthand("l1:2") == NormDescriptor::l1(2));
  CHECK(parse_norm_shorthand("linf:4") == NormDescriptor::linf(4));
  CHECK(parse_norm_shorthand("lp:inf:3") == NormDescriptor::linf(3));
  CHECK(parse_norm_shorthand("lp:3:2") == NormDescriptor::lp(2, 3.0));
  CHECK(parse_norm_shorthand("lp:3:2").name() == "lp:3:2");
  for (const char* bad : {"l2", "l2:0", "lq:2", "lp:0.5:2", "l2:x", ""})
    CHECK_THROWS_AS(parse_norm_shorthand(bad), InvalidArgument);
}

TEST_CASE("norm axioms on seeded samples for every built-in") {
  for (int dim : {2, 3}) {
    for (const auto& n : builtin_norms(dim)) {
      CAPTURE(n.name());
      Rng rng = make_rng(7, 0);
      for (int k = 0; k < 200; ++k) {
        const Vector a = gaussian_vector(rng, dim);
        const Vector b = gaussian_vector(rng, dim);
        const double t = uniform_real(rng, -2.0, 2.0);
        CHECK(n(a + b) <= n(a) + n(b) + 1e-12);
        CHECK(n(t * a) == doctest::Approx(std::abs(t) * n(a)));
        CHECK(n(a) > 0.0);
        CHECK(n(sample_sphere(n, rng)) == doctest::Approx(1.0));
        CHECK(n(sample_ball(n, rng)) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("linear map shapes are checked") {
  CHECK_THROWS_AS(LinearMap::make(Matrix::Identity(2, 3), NormDescriptor::l2(2),
                                  NormDescriptor::l2(2)),
                  InvalidArgument);
  CHECK_NOTHROW(LinearMap::make(Matrix::Identity(2, 3), NormDescriptor::l2(3),
                                NormDescriptor::l2(2)));
}

}

TEST_SUITE("sphere_net") {

TEST_CASE("audited covering radius stays within eps") {
  for (const auto& n : builtin_norms(2)) {
    CAPTURE(n.name());
    const auto net = sphere_net(n, 0.05, 1);
    CHECK(net.audited_radius <= 0.05);
    for (const auto& p : net.points) CHECK(n(p) == doctest::Approx(1.0));
  }
  const auto net3 = sphere_net(NormDescriptor::l2(3), 0.2, 1);
  CHECK(net3.audited_radius <= 0.2);
}

TEST_CASE("one-dimensional sphere is two points") {
  const auto net = sphere_net(NormDescriptor::l1(1), 0.1, 0);
  CHECK(net.points.size() == 2);
}

TEST_CASE("an undersized pool is reported, not hidden") {
  SphereNetOptions opt;
  opt.pool_size = 8;
  opt.max_pool_size = 8;
  CHECK_THROWS_AS(sphere_net(NormDescriptor::l2(3), 0.01, 0, opt), NumericFailure);
  CHECK_THROWS_AS(sphere_net(NormDescriptor::l2(2), 0.0, 0), InvalidArgument);
}

TEST_CASE("same seed, same net") {
  const auto a = sphere_net(NormDescriptor::l1(3), 0.2, 5);
  const auto b = sphere_net(NormDescriptor::l1(3), 0.2, 5);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) CHECK(a.points[k] == b.points[k]);
}

}
