#pragma once

#include "isomlab/common.hpp"

#include <functional>
#include <limits>
#include <vector>

namespace isomlab {

/// Fixed-schedule perturbation (pattern) descent shared by the Banach-Mazur
/// estimator, the embedding solver and the sphere minimizations.
///
/// Each iteration sweeps the coordinate directions, any problem-specific
/// directions and a few seeded random directions, each tried with +step and
/// -step; a trial point is accepted on strict improvement and the sweep
/// continues from it. An iteration without improvement halves the step.
struct DescentOptions {
  double initial_step = 0.5;
  int iterations = 200;
  /// Stop once the step falls below this.
  double min_step = 1e-10;
  int random_directions = 0;
  /// Stop as soon as the objective reaches this value.
  double target = -std::numeric_limits<double>::infinity();
  /// Extra directions computed at the start of every sweep.
  std::function<std::vector<Vector>(const Vector&)> directions;
  /// Applied to every accepted point (e.g. rescaling for scale-free objectives).
  std::function<Vector(const Vector&)> normalize;
};

struct DescentResult {
  Vector x;
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  double final_step = 0.0;
  std::int64_t evaluations = 0;
};

DescentResult perturbation_descent(const std::function<double(const Vector&)>& objective,
                                   Vector start, const DescentOptions& options, Rng& rng);

}  // namespace isomlab
