#pragma once

#include "isomlab/norms.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace isomlab {

/// Named scalar function phi : [0, inf) -> [0, inf).
struct ScalarFunction {
  std::string name;
  std::vector<double> params;
  std::function<double(double)> fn;
  double operator()(double t) const { return fn(t); }
};

ScalarFunction phi_zero();
/// phi(t) = |t|
ScalarFunction phi_abs();
/// phi(t) = sqrt(eps * max(t, 0))
ScalarFunction phi_sqrt_scaled(double eps);
/// Piecewise-linear through (knots[k], values[k]); constant beyond the ends.
ScalarFunction phi_table(std::vector<double> knots, std::vector<double> values);
/// Lookup by name: "zero", "abs", "sqrt_scaled" (params = {eps}), "table"
/// (params = knots followed by values). Throws InvalidArgument otherwise.
ScalarFunction make_phi(const std::string& name, const std::vector<double>& params);

/// A map between normed spaces that can be evaluated anywhere.
struct MapFormula {
  std::string name;
  NormDescriptor domain = NormDescriptor::l2(1);
  NormDescriptor codomain = NormDescriptor::l2(1);
  std::function<Vector(const Vector&)> eval;
  /// Known to be onto the codomain (up to the stated surjectivity gap).
  bool surjective = false;
  /// Hausdorff gap between the image and the codomain, when surjective.
  double surjectivity_gap = 0.0;

  Vector operator()(const Vector& v) const;
  /// The same map translated so that it sends 0 to 0.
  MapFormula centered() const;
};

/// v -> (v, phi(||v||_V)) into the product norm on V + R.
MapFormula make_f_phi(const NormDescriptor& v, const NormDescriptor& plane,
                      const ScalarFunction& phi);

MapFormula make_linear(const LinearMap& map);

/// v -> T v + n(v), where n is a deterministic pseudo-random function of v
/// with ||n(v)||_W <= noise_radius.
MapFormula make_noisy_linear(const LinearMap& map, double noise_radius, std::uint64_t seed);

/// v -> v + offset on a single space.
MapFormula make_translation(const NormDescriptor& v, const Vector& offset);

/// A finite pairing v_i -> w_i.
struct SampledMap {
  std::vector<Vector> domain_points;
  std::vector<Vector> image_points;
  /// "explicit-formula(<name>)" or "data".
  std::string source = "data";
};

SampledMap sample_map(const MapFormula& f, std::vector<Vector> points);

}  // namespace isomlab
