#pragma once

#include "isomlab/maps.hpp"
#include "isomlab/sphere_net.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isomlab {

/// max over sampled pairs of | ||f(v) - f(u)||_W - ||v - u||_V |; a lower
/// bound for the distortion of the underlying map.
double sampled_distortion(const SampledMap& f, const NormDescriptor& v,
                          const NormDescriptor& w);

/// Distortion over `pairs` seeded pairs with ||v|| <= radius. Each endpoint
/// is the origin with probability 1/8, otherwise a sphere direction scaled by
/// radius * u with u uniform, so that every scale up to `radius` is visited.
double pair_sampled_distortion(const MapFormula& f, int pairs, double radius,
                               std::uint64_t seed);

/// Result of checking the distortion of f_phi against a claimed eps.
struct PhiValidation {
  double claimed_eps = 0.0;
  double measured = 0.0;
  /// 1 when measured <= claimed; otherwise claimed / measured, the factor
  /// applied to phi.
  double rescale = 1.0;
  MapFormula map;
};

PhiValidation validate_f_phi(const NormDescriptor& v, const NormDescriptor& plane,
                             const ScalarFunction& phi, double claimed_eps, int pairs,
                             double radius, std::uint64_t seed);

/// sup over targets of the W-distance to the nearest image point.
double delta_surjectivity(const SampledMap& f, const std::vector<Vector>& targets,
                          const NormDescriptor& w);

/// `count` probes (at least 2 dim): the basis vectors scaled to norm radius
/// and their negatives, then seeded points of the radius ball.
std::vector<Vector> make_probes(const NormDescriptor& v, int count, double radius,
                                std::uint64_t seed);

/// Geometric schedule 2^first, ..., 2^last.
std::vector<double> geometric_scales(int first, int last);

struct ConvergenceRow {
  double scale = 0.0;
  /// ||f(s e_i)/s - U e_i||_W per basis vector.
  std::vector<double> residual;
  /// max_i ||f(s e_i)/s - f(s' e_i)/s'||_W against the next scale s'; 0 on
  /// the last row.
  double cauchy = 0.0;
};

struct RecoveryResult {
  LinearMap map;
  /// f(0), subtracted before recovery.
  Vector translation;
  std::vector<ConvergenceRow> table;
  /// max over probe pairs of ||U(u + v) - U u - U v||.
  double linearity_residual = 0.0;
  /// max over probes of | ||U v|| - ||v|| |.
  double isometry_residual = 0.0;
  /// Cauchy differences failed to decrease anywhere along the schedule.
  bool divergent = false;
};

/// Estimates the isometry U(v) = lim f(s v)/s column by column at the
/// largest scale, after centering f at the origin. Needs >= 3 strictly
/// increasing scales.
RecoveryResult hyers_ulam_recover(const MapFormula& f, const std::vector<double>& scales,
                                  const std::vector<Vector>& probes);

struct BoundCheck {
  std::string name;
  /// Result the constant comes from.
  std::string source;
  double bound = 0.0;
  bool satisfied = false;
  double max_residual = 0.0;
};

struct EpsIsometryReport {
  /// Distortion of f over the probe set.
  double eps_observed = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  double delta_observed = 0.0;
  /// eps < eps_observed: the bounds below do not apply.
  bool vacuous = false;
  /// Added to eps and to every bound before comparing.
  double rounding_slack = 0.0;
  double probe_radius = 0.0;
  int probes = 0;
  std::vector<BoundCheck> checks;
};

/// Compares sup over seeded probes of ||f(v) - U v|| (f centered) with the
/// constants 10 eps, 12 eps + 5 delta, 2 eps + 2 delta, 5 eps and 2 eps.
EpsIsometryReport bound_check(const MapFormula& f, const LinearMap& u, double eps,
                              double delta, double radius, int sample, std::uint64_t seed);

struct BorsukWitness {
  Vector point;
  double gap = 0.0;
  /// 2R - gap, a certified lower bound on dis f.
  double distortion_lb = 0.0;
};

/// Minimizes ||f(v) - f(-v)|| over the radius-R sphere of f's domain, seeded
/// from the scaled net and refined by perturbation descent.
BorsukWitness borsuk_witness(const MapFormula& f, double radius, const SphereNet& net);

/// offset + span(columns of basis) inside W.
struct AffineSubspace {
  Matrix basis;
  Vector offset;
};

struct DeviationRow {
  double radius = 0.0;
  double sup_distance = 0.0;
};

/// For each radius R, sup over seeded points with ||v|| <= R (half of them
/// on the sphere ||v|| = R) of the W-distance from f(v) to the subspace.
std::vector<DeviationRow> affine_deviation(const MapFormula& f, const AffineSubspace& subspace,
                                           const std::vector<double>& radii, int sample,
                                           std::uint64_t seed);

/// W-distance from `point` to the subspace (least-squares start, then
/// perturbation descent over subspace coordinates).
double distance_to_subspace(const Vector& point, const AffineSubspace& subspace,
                            const NormDescriptor& w);

}  // namespace isomlab
