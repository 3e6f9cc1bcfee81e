#include "isomlab/sphere_net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace isomlab {

namespace {

constexpr std::uint64_t kPoolStream = 1;
constexpr std::uint64_t kAuditStream = 2;

std::vector<Vector> candidate_pool(const NormDescriptor& norm, double eps,
                                   std::uint64_t seed, const SphereNetOptions& options) {
  const int dim = norm.dim();
  std::vector<Vector> pool = norm.known_extreme_points();
  for (auto& p : pool) p /= norm.eval(p);

  if (dim == 2) {
    std::size_t count = options.pool_size;
    if (count == 0) count = static_cast<std::size_t>(std::ceil(64.0 / eps));
    count = std::min(count, options.max_pool_size);
    count = (count + 7) / 8 * 8;
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = 2.0 * std::numbers::pi * double(k) / double(count);
      Vector v(2);
      v << std::cos(angle), std::sin(angle);
      pool.push_back(v / norm.eval(v));
    }
    return pool;
  }

  std::size_t count = options.pool_size;
  if (count == 0) count = static_cast<std::size_t>(std::ceil(500.0 * std::pow(1.0 / eps, dim - 1)));
  count = std::min(count, options.max_pool_size);
  Rng rng = make_rng(seed, kPoolStream);
  for (std::size_t k = 0; k < count; ++k) pool.push_back(sample_sphere(norm, rng));
  return pool;
}

}  // namespace

double audit_covering_radius(const SphereNet& net, int samples, std::uint64_t seed) {
  Rng rng = make_rng(seed, kAuditStream);
  Matrix points(net.norm.dim(), static_cast<Eigen::Index>(net.points.size()));
  for (std::size_t k = 0; k < net.points.size(); ++k) points.col(k) = net.points[k];
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vector q = sample_sphere(net.norm, rng);
    worst = std::max(worst, column_norms(net.norm, points.colwise() - q).minCoeff());
  }
  return worst;
}

SphereNet sphere_net(const NormDescriptor& norm, double eps, std::uint64_t seed,
                     const SphereNetOptions& options) {
  if (!(eps > 0.0)) throw InvalidArgument("sphere_net: eps must be positive");
  SphereNet net;
  net.norm = norm;
  net.epsilon = eps;

  if (norm.dim() == 1) {
    const double unit = 1.0 / norm.eval(Vector::Ones(1));
    net.points = {Vector::Constant(1, unit), Vector::Constant(1, -unit)};
    net.audited_radius = 0.0;
    return net;
  }

  const auto pool = candidate_pool(norm, eps, seed, options);
  net.pool_size = pool.size();
  // Grid pools are dense relative to eps; random pools need more slack.
  const double target = (norm.dim() == 2 ? 0.75 : 0.5) * eps;

  Matrix candidates(norm.dim(), static_cast<Eigen::Index>(pool.size()));
  for (std::size_t k = 0; k < pool.size(); ++k) candidates.col(k) = pool[k];
  Vector gap = Vector::Constant(candidates.cols(), std::numeric_limits<double>::infinity());
  Eigen::Index next = 0;
  while (true) {
    const Vector center = candidates.col(next);
    net.points.push_back(center);
    gap = gap.cwiseMin(column_norms(norm, candidates.colwise() - center));
    // maxCoeff returns the first maximal index, as the scalar loop did.
    if (gap.maxCoeff(&next) <= target) break;
  }

  net.audit_samples = options.audit_samples;
  net.audited_radius = audit_covering_radius(net, options.audit_samples, seed);
  if (net.audited_radius > eps) {
    std::ostringstream msg;
    msg << "sphere_net: eps " << eps << " too small for a pool of " << pool.size()
        << " candidates on " << norm.name() << "; achieved covering radius "
        << net.audited_radius;
    throw NumericFailure(msg.str());
  }
  return net;
}

}  // namespace isomlab
