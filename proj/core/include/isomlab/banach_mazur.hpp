#pragma once

#include "isomlab/gromov_hausdorff.hpp"
#include "isomlab/norms.hpp"
#include "isomlab/sphere_net.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace isomlab {

/// Operator norm bracket from a sphere net of the domain.
struct OperatorNormEstimate {
  /// max over the net of ||T v||; never exceeds the true operator norm.
  double lower = 0.0;
  /// lower * (1 + eps) / (1 - eps).
  double upper = 0.0;
  /// Largest singular value, present for l2 -> l2 maps.
  std::optional<double> spectral;
};

/// Throws InvalidArgument when the net does not live on T's domain or eps >= 1.
OperatorNormEstimate operator_norm(const LinearMap& map, const SphereNet& net);

struct BanachMazurOptions {
  int restarts = 8;
  std::uint64_t seed = 0;
  /// Net radius per dimension; 0 picks 0.01 in dimension 2, 0.1 above.
  double net_eps = 0.0;
  int iterations = 200;
  double min_step = 1e-10;
  int threads = 1;
};

/// Upper estimate of log(inf ||T|| ||T^-1||) over invertible T : V -> W.
struct BanachMazurEstimate {
  /// log(lower(T) * lower(T^-1)) at the best T found; infinity when the
  /// dimensions differ.
  double value = 0.0;
  /// log(upper(T) * upper(T^-1)) for the same T.
  double upper = 0.0;
  /// upper - value, the width induced by the two nets.
  double net_error = 0.0;
  std::optional<LinearMap> witness;
  int best_restart = -1;
  std::vector<double> restart_values;
  double net_eps_v = 0.0;
  double net_eps_w = 0.0;
};

/// Multi-start perturbation descent over invertible matrices. Restart 0
/// starts from the identity; the others from seeded random matrices.
/// Restarts run independently and merge by minimum value, ties to the lowest
/// restart index. Throws NumericFailure if every restart is singular.
BanachMazurEstimate banach_mazur_estimate(const NormDescriptor& v, const NormDescriptor& w,
                                          const BanachMazurOptions& options = {});

/// Net-induced log error of a pair of nets: log((1+e)/(1-e)) summed.
double net_log_error(double eps_v, double eps_w);

struct KadetsReport {
  int sample = 0;
  /// Bracket on d_GH between the two sampled ball subsets.
  double gh_lower = 0.0;
  double gh_upper = 0.0;
  bool gh_exact = false;
  /// Largest distance from a seeded ball point to its nearest sample point,
  /// per side; sample-to-ball transfer needs these.
  double coverage_v = 0.0;
  double coverage_w = 0.0;
  /// Banach-Mazur context for the same pair.
  BanachMazurEstimate banach_mazur;
};

/// Samples `sample` points from each unit ball (the origin included), runs
/// branch-and-bound on the resulting finite spaces and reports the bracket
/// next to the Banach-Mazur estimate. The Kadets distance itself is not
/// computed. Requires dims <= 3 and sample <= 64.
KadetsReport kadets_gh_relation_report(const NormDescriptor& v, const NormDescriptor& w,
                                       int sample, std::uint64_t seed,
                                       const BranchAndBoundOptions& bnb = {},
                                       const BanachMazurOptions& bm = {});

}  // namespace isomlab
