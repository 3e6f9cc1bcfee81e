#include "isomlab/maps.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace isomlab {

ScalarFunction phi_zero() {
  return {"zero", {}, [](double) { return 0.0; }};
}

ScalarFunction phi_abs() {
  return {"abs", {}, [](double t) { return std::abs(t); }};
}

ScalarFunction phi_sqrt_scaled(double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("sqrt_scaled: eps must be positive");
  return {"sqrt_scaled", {eps}, [eps](double t) { return std::sqrt(eps * std::max(t, 0.0)); }};
}

ScalarFunction phi_table(std::vector<double> knots, std::vector<double> values) {
  if (knots.empty() || knots.size() != values.size())
    throw InvalidArgument("table: knots and values must be non-empty and of equal length");
  if (!std::is_sorted(knots.begin(), knots.end()) ||
      std::adjacent_find(knots.begin(), knots.end()) != knots.end())
    throw InvalidArgument("table: knots must be strictly increasing");
  std::vector<double> params = knots;
  params.insert(params.end(), values.begin(), values.end());
  auto fn = [knots = std::move(knots), values = std::move(values)](double t) {
    if (t <= knots.front()) return values.front();
    if (t >= knots.back()) return values.back();
    const auto hi = static_cast<std::size_t>(
        std::upper_bound(knots.begin(), knots.end(), t) - knots.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - knots[lo]) / (knots[hi] - knots[lo]);
    return (1.0 - w) * values[lo] + w * values[hi];
  };
  return {"table", std::move(params), std::move(fn)};
}

ScalarFunction make_phi(const std::string& name, const std::vector<double>& params) {
  if (name == "zero") return phi_zero();
  if (name == "abs") return phi_abs();
  if (name == "sqrt_scaled") {
    if (params.size() != 1) throw InvalidArgument("sqrt_scaled takes one parameter (eps)");
    return phi_sqrt_scaled(params[0]);
  }
  if (name == "table") {
    if (params.size() % 2 != 0)
      throw InvalidArgument("table takes knots followed by the same number of values");
    const auto half = static_cast<std::ptrdiff_t>(params.size() / 2);
    return phi_table({params.begin(), params.begin() + half},
                     {params.begin() + half, params.end()});
  }
  throw InvalidArgument("unknown phi '" + name + "' (expected zero, abs, sqrt_scaled, table)");
}

Vector MapFormula::operator()(const Vector& v) const {
  if (v.size() != domain.dim())
    throw InvalidArgument(name + ": argument has dimension " + std::to_string(v.size()) +
                          ", domain is " + domain.name());
  return eval(v);
}

MapFormula MapFormula::centered() const {
  MapFormula out = *this;
  const Vector origin = eval(Vector::Zero(domain.dim()));
  if (origin.isZero(0.0)) return out;
  out.eval = [inner = eval, origin](const Vector& v) { return Vector(inner(v) - origin); };
  return out;
}

MapFormula make_f_phi(const NormDescriptor& v, const NormDescriptor& plane,
                      const ScalarFunction& phi) {
  MapFormula f;
  std::ostringstream name;
  name << "f_phi(" << phi.name;
  for (double p : phi.params) name << "," << p;
  name << ")";
  f.name = name.str();
  f.domain = v;
  f.codomain = NormDescriptor::product(v, plane);
  f.eval = [v, phi](const Vector& x) {
    Vector out(x.size() + 1);
    out.head(x.size()) = x;
    out[x.size()] = phi(v.eval(x));
    return out;
  };
  return f;
}

MapFormula make_linear(const LinearMap& map) {
  MapFormula f;
  f.name = "linear";
  f.domain = map.domain;
  f.codomain = map.codomain;
  f.eval = [m = map.matrix](const Vector& x) { return Vector(m * x); };
  f.surjective = map.matrix.rows() == map.matrix.cols() &&
                 Eigen::FullPivLU<Matrix>(map.matrix).isInvertible();
  return f;
}

namespace {

std::uint64_t hash_vector(const Vector& v, std::uint64_t seed) {
  std::uint64_t h = mix_seed(seed);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v[i] == 0.0 ? 0.0 : v[i];  // fold -0.0 into +0.0
    h = mix_seed(h ^ std::bit_cast<std::uint64_t>(x));
  }
  return h;
}

}  // namespace

MapFormula make_noisy_linear(const LinearMap& map, double noise_radius, std::uint64_t seed) {
  if (!(noise_radius >= 0.0)) throw InvalidArgument("noise radius must be non-negative");
  MapFormula f = make_linear(map);
  f.name = "noisy_linear";
  f.surjectivity_gap = noise_radius;
  f.eval = [m = map.matrix, w = map.codomain, noise_radius, seed](const Vector& x) {
    Vector out = m * x;
    if (noise_radius == 0.0) return out;
    Rng rng(hash_vector(x, seed));
    const Vector dir = sample_sphere(w, rng);
    out += (noise_radius * uniform_real(rng, 0.0, 1.0)) * dir;
    return out;
  };
  return f;
}

MapFormula make_translation(const NormDescriptor& v, const Vector& offset) {
  if (offset.size() != v.dim()) throw InvalidArgument("translation offset has wrong dimension");
  MapFormula f;
  f.name = "translation";
  f.domain = f.codomain = v;
  f.surjective = true;
  f.eval = [offset](const Vector& x) { return Vector(x + offset); };
  return f;
}

SampledMap sample_map(const MapFormula& f, std::vector<Vector> points) {
  SampledMap s;
  s.image_points.reserve(points.size());
  for (const auto& p : points) s.image_points.push_back(f(p));
  s.domain_points = std::move(points);
  s.source = "explicit-formula(" + f.name + ")";
  return s;
}

}  // namespace isomlab
