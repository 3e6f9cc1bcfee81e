#include "isomlab/descent.hpp"

#include <cmath>

namespace isomlab {

DescentResult perturbation_descent(const std::function<double(const Vector&)>& objective,
                                   Vector start, const DescentOptions& options, Rng& rng) {
  DescentResult result;
  if (options.normalize) start = options.normalize(start);
  result.x = std::move(start);
  result.value = objective(result.x);
  result.evaluations = 1;
  double step = options.initial_step;
  const auto n = result.x.size();

  auto attempt = [&](const Vector& direction) {
    for (double sign : {1.0, -1.0}) {
      Vector trial = result.x + (sign * step) * direction;
      if (options.normalize) trial = options.normalize(trial);
      const double value = objective(trial);
      ++result.evaluations;
      if (value < result.value) {
        result.x = std::move(trial);
        result.value = value;
        return true;
      }
    }
    return false;
  };

  for (int iter = 0; iter < options.iterations; ++iter) {
    if (result.value <= options.target || step < options.min_step) break;
    ++result.iterations;
    bool improved = false;
    for (Eigen::Index k = 0; k < n; ++k) improved |= attempt(Vector::Unit(n, k));
    if (options.directions) {
      for (const Vector& d : options.directions(result.x)) improved |= attempt(d);
    }
    for (int r = 0; r < options.random_directions; ++r) {
      Vector d = gaussian_vector(rng, static_cast<int>(n));
      const double length = d.norm();
      if (length > 0.0) improved |= attempt(d / length);
    }
    if (!improved) step *= 0.5;
  }
  result.final_step = step;
  return result;
}

}  // namespace isomlab
