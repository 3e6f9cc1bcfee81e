#pragma once

#include "isomlab/metric_space.hpp"
#include "isomlab/norms.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isomlab {

/// Placement of a finite metric space in R^dim under a norm.
struct EmbeddingResult {
  /// |S| x dim coordinates, one row per point.
  Matrix placement;
  /// max over pairs of | ||x_i - x_j|| - d_ij |
  double residual = 0.0;
  int restarts_used = 0;
  int best_restart = -1;
  double embeddable_threshold = 1e-6;
  double isometry_threshold = 1e-9;

  bool embeddable() const { return residual <= embeddable_threshold; }
  bool certified_isometry() const { return residual <= isometry_threshold; }
  /// "embeddable" or "not-found"; never a claim of impossibility.
  std::string verdict() const { return embeddable() ? "embeddable" : "not-found"; }
};

double placement_residual(const FiniteMetricSpace& s, const NormDescriptor& w,
                          const Matrix& placement);

/// x_i = (d(x_i, x_1), ..., d(x_i, x_n)) in l_inf^n.
EmbeddingResult frechet_embed(const FiniteMetricSpace& s);

struct EmbeddingOptions {
  int restarts = 16;
  std::uint64_t seed = 0;
  int iterations = 400;
  double embeddable_threshold = 1e-6;
  double isometry_threshold = 1e-9;
  int threads = 1;
};

/// Multi-start placement search. Restart 0 starts from the Frechet placement
/// truncated (or zero-padded) to dim W, restart 1 from its principal-axis
/// projection, the rest from seeded random placements. Each restart runs
/// perturbation descent on the summed squared residual, then on the max
/// residual. The best restart wins, ties to the lowest index.
EmbeddingResult embed_finite(const FiniteMetricSpace& s, const NormDescriptor& w,
                             const EmbeddingOptions& options = {});

/// m points, all pairwise distances equal to `side`.
FiniteMetricSpace equilateral_space(int m, double side);

struct EquilateralSet {
  std::vector<Vector> points;
  double side = 1.0;
  double residual = 0.0;
  int restarts_used = 0;
  /// Produced by the cube-vertex construction rather than by search.
  bool constructed = false;
};

/// The first m vertices of {0, side}^n in lexicographic order.
std::vector<Vector> cube_vertices(int n, int m, double side);

/// Cube-vertex construction for l_inf^n with m <= 2^n; embed_finite on the
/// m-point equilateral space otherwise.
EquilateralSet equilateral_search(const NormDescriptor& w, int m, double side,
                                  const EmbeddingOptions& options = {});

/// The finite space on sphere_net(V, 1/n) united with the origin (listed
/// first), with distances measured in V.
FiniteMetricSpace net_union_instance(const NormDescriptor& v, int n, std::uint64_t seed = 0);

}  // namespace isomlab
