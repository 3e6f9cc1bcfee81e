#pragma once

#include "isomlab/norms.hpp"

#include <cstdint>
#include <vector>

namespace isomlab {

/// Finite subset of the unit sphere of `norm` whose covering radius was
/// measured by a seeded random audit.
struct SphereNet {
  std::vector<Vector> points;
  double epsilon = 0.0;
  NormDescriptor norm = NormDescriptor::l2(1);
  /// Largest nearest-net distance over the audit sample.
  double audited_radius = 0.0;
  int audit_samples = 0;
  std::size_t pool_size = 0;
};

struct SphereNetOptions {
  /// 0 picks a size from eps and the dimension.
  std::size_t pool_size = 0;
  std::size_t max_pool_size = 400'000;
  int audit_samples = 10'000;
};

/// Greedy farthest-point net from a dense candidate pool on the unit sphere
/// (an angle grid in dimension 2, seeded random directions otherwise, plus
/// any closed-form extreme points of the ball). Throws NumericFailure with
/// the achieved radius when the audit exceeds eps.
SphereNet sphere_net(const NormDescriptor& norm, double eps, std::uint64_t seed,
                     const SphereNetOptions& options = {});

/// Largest nearest-net distance from `samples` seeded sphere points.
double audit_covering_radius(const SphereNet& net, int samples, std::uint64_t seed);

}  // namespace isomlab
