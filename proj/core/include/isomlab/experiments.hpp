#pragma once

#include "isomlab/report.hpp"

#include <optional>
#include <vector>

namespace isomlab {

/// Exact maps, exact correspondences and branch-and-bound on (scale X,
/// scale Y), with agreement rows between whichever of them ran.
Report run_gh(const FiniteMetricSpace& x, const FiniteMetricSpace& y, double scale,
              const ExperimentConfig& config);

/// Table of d_GH(lambda X, lambda Y) against lambda d_GH(X, Y); every lambda
/// must be positive.
Report run_scaling(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                   const std::vector<double>& lambdas, const ExperimentConfig& config);

struct RecoverParams {
  /// Distortion bound to test; defaults to the map's declared eps (phi
  /// parameter, twice the noise radius) or else the observed distortion.
  std::optional<double> eps;
  /// Defaults to the map's declared surjectivity gap.
  std::optional<double> delta;
  double radius = 10.0;
  int probes = 512;
  std::vector<double> scales;
  /// Pairs and radius of the dense audit run on sqrt_scaled phi maps.
  int audit_pairs = 10'000;
  double audit_radius = 1e3;
};

/// Recovery of the approximating isometry followed by the bound checks.
/// Violations by maps that are not onto W are expected-fail rows.
Report run_recover(const Json& map_spec, const RecoverParams& params,
                   const ExperimentConfig& config);

Report run_bm(const NormDescriptor& v, const NormDescriptor& w, int restarts, double net_eps,
              const ExperimentConfig& config);

Report run_embed(const FiniteMetricSpace& s, const NormDescriptor& w, int restarts,
                 const ExperimentConfig& config);

Report run_simplex(const NormDescriptor& w, int m, double side, int restarts,
                   const ExperimentConfig& config);

Report run_borsuk(const Json& map_spec, const std::vector<double>& radii, double net_eps,
                  const ExperimentConfig& config);

Report run_kadets(const NormDescriptor& v, const NormDescriptor& w, int sample,
                  const ExperimentConfig& config);

}  // namespace isomlab
