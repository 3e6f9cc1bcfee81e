#include "isomlab/approx_isometry.hpp"
#include "isomlab/descent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isomlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double sampled_distortion(const SampledMap& f, const NormDescriptor& v,
                          const NormDescriptor& w) {
  if (f.domain_points.size() != f.image_points.size())
    throw InvalidArgument("sampled map has mismatched domain and image lengths");
  double worst = 0.0;
  const auto n = f.domain_points.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double before = v(f.domain_points[a] - f.domain_points[b]);
      const double after = w(f.image_points[a] - f.image_points[b]);
      worst = std::max(worst, std::abs(after - before));
    }
  }
  return worst;
}

double pair_sampled_distortion(const MapFormula& f, int pairs, double radius,
                               std::uint64_t seed) {
  Rng rng = make_rng(seed, 21);
  auto draw = [&] {
    if (uniform_real(rng, 0.0, 1.0) < 0.125) return Vector(Vector::Zero(f.domain.dim()));
    return Vector(sample_sphere(f.domain, rng) * (radius * uniform_real(rng, 0.0, 1.0)));
  };
  double worst = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const Vector a = draw();
    const Vector b = draw();
    const double gap = std::abs(f.codomain(f(a) - f(b)) - f.domain(a - b));
    worst = std::max(worst, gap);
  }
  return worst;
}

PhiValidation validate_f_phi(const NormDescriptor& v, const NormDescriptor& plane,
                             const ScalarFunction& phi, double claimed_eps, int pairs,
                             double radius, std::uint64_t seed) {
  PhiValidation out;
  out.claimed_eps = claimed_eps;
  out.map = make_f_phi(v, plane, phi);
  out.measured = pair_sampled_distortion(out.map, pairs, radius, seed);
  if (out.measured > claimed_eps) {
    out.rescale = claimed_eps / out.measured;
    ScalarFunction scaled = phi;
    scaled.fn = [inner = phi.fn, k = out.rescale](double t) { return k * inner(t); };
    scaled.params.push_back(out.rescale);
    out.map = make_f_phi(v, plane, scaled);
  }
  return out;
}

double delta_surjectivity(const SampledMap& f, const std::vector<Vector>& targets,
                          const NormDescriptor& w) {
  if (f.image_points.empty()) throw InvalidArgument("delta_surjectivity: empty image sample");
  if (targets.empty()) throw InvalidArgument("delta_surjectivity: empty target sample");
  double worst = 0.0;
  for (const auto& t : targets) {
    double nearest = kInf;
    for (const auto& p : f.image_points) nearest = std::min(nearest, w(t - p));
    worst = std::max(worst, nearest);
  }
  return worst;
}

std::vector<Vector> make_probes(const NormDescriptor& v, int count, double radius,
                                std::uint64_t seed) {
  std::vector<Vector> probes;
  const int dim = v.dim();
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::Unit(dim, i);
    e *= radius / v.eval(e);
    probes.push_back(e);
    probes.push_back(-e);
  }
  Rng rng = make_rng(seed, 31);
  while (static_cast<int>(probes.size()) < count) probes.push_back(radius * sample_ball(v, rng));
  return probes;
}

std::vector<double> geometric_scales(int first, int last) {
  std::vector<double> scales;
  for (int k = first; k <= last; ++k) scales.push_back(std::ldexp(1.0, k));
  return scales;
}

RecoveryResult hyers_ulam_recover(const MapFormula& f, const std::vector<double>& scales,
                                  const std::vector<Vector>& probes) {
  if (scales.size() < 3) throw InvalidArgument("hyers_ulam_recover: need at least 3 scales");
  for (std::size_t k = 0; k < scales.size(); ++k) {
    if (!(scales[k] > 0.0) || (k > 0 && !(scales[k] > scales[k - 1])))
      throw InvalidArgument("hyers_ulam_recover: scales must be positive and strictly increasing");
  }
  const NormDescriptor& v = f.domain;
  const NormDescriptor& w = f.codomain;
  const int n = v.dim();

  RecoveryResult out;
  out.translation = f.eval(Vector::Zero(n));
  const MapFormula g = f.centered();

  // quotients[k][i] = g(s_k e_i) / s_k
  std::vector<std::vector<Vector>> quotients(scales.size());
  for (std::size_t k = 0; k < scales.size(); ++k)
    for (int i = 0; i < n; ++i)
      quotients[k].push_back(g.eval(scales[k] * Vector::Unit(n, i)) / scales[k]);

  Matrix u(w.dim(), n);
  for (int i = 0; i < n; ++i) u.col(i) = quotients.back()[i];
  out.map = LinearMap::make(u, v, w);

  for (std::size_t k = 0; k < scales.size(); ++k) {
    ConvergenceRow row;
    row.scale = scales[k];
    for (int i = 0; i < n; ++i) row.residual.push_back(w.eval(quotients[k][i] - u.col(i)));
    if (k + 1 < scales.size()) {
      for (int i = 0; i < n; ++i)
        row.cauchy = std::max(row.cauchy, w.eval(quotients[k][i] - quotients[k + 1][i]));
    }
    out.table.push_back(std::move(row));
  }

  // A convergent schedule shrinks the Cauchy differences somewhere; flag the
  // table when they never decrease and are not negligible.
  double column_scale = 0.0;
  for (int i = 0; i < n; ++i) column_scale = std::max(column_scale, w.eval(u.col(i)));
  bool never_decreases = true;
  for (std::size_t k = 1; k + 1 < out.table.size(); ++k)
    never_decreases &= out.table[k].cauchy >= out.table[k - 1].cauchy;
  const double last = out.table[out.table.size() - 2].cauchy;
  out.divergent = never_decreases && last > 1e-9 * std::max(1.0, column_scale);

  for (std::size_t a = 0; a < probes.size(); ++a) {
    const Vector ua = u * probes[a];
    out.isometry_residual = std::max(out.isometry_residual, std::abs(w.eval(ua) - v.eval(probes[a])));
    for (std::size_t b = a + 1; b < probes.size(); ++b) {
      const Vector diff = u * (probes[a] + probes[b]) - ua - u * probes[b];
      out.linearity_residual = std::max(out.linearity_residual, w.eval(diff));
    }
  }
  return out;
}

EpsIsometryReport bound_check(const MapFormula& f, const LinearMap& u, double eps,
                              double delta, double radius, int sample, std::uint64_t seed) {
  if (!(eps >= 0.0) || !(delta >= 0.0)) throw InvalidArgument("bound_check: eps and delta must be >= 0");
  if (u.domain.dim() != f.domain.dim() || u.codomain.dim() != f.codomain.dim())
    throw InvalidArgument("bound_check: U does not match the map's spaces");

  EpsIsometryReport report;
  report.eps = eps;
  report.delta = delta;
  report.probe_radius = radius;
  const auto probes = make_probes(f.domain, sample, radius, seed);
  report.probes = static_cast<int>(probes.size());

  const MapFormula g = f.centered();
  const SampledMap sampled = sample_map(g, probes);
  report.eps_observed = sampled_distortion(sampled, f.domain, f.codomain);
  // Exact isometries still pick up rounding of order 1e-16 * radius.
  report.rounding_slack = 1e-12 * std::max(1.0, radius);
  report.vacuous = eps + report.rounding_slack < report.eps_observed;

  // Sampled gap between U(V) and f(V) on the probe ball.
  std::vector<Vector> linear_image;
  for (const auto& p : probes) linear_image.push_back(u.matrix * p);
  report.delta_observed = delta_surjectivity(sampled, linear_image, f.codomain);

  double residual = 0.0;
  for (std::size_t k = 0; k < probes.size(); ++k)
    residual = std::max(residual, f.codomain.eval(sampled.image_points[k] - u.matrix * probes[k]));

  const struct {
    const char* name;
    const char* source;
    double bound;
  } constants[] = {
      {"10eps", "Hyers-Ulam", 10.0 * eps},
      {"12eps+5delta", "Dilworth", 12.0 * eps + 5.0 * delta},
      {"2eps+2delta", "Semrl-Vaisala", 2.0 * eps + 2.0 * delta},
      {"5eps", "Gruber", 5.0 * eps},
      {"2eps", "Omladic-Semrl", 2.0 * eps},
  };
  for (const auto& c : constants)
    report.checks.push_back({c.name, c.source, c.bound, residual <= c.bound + report.rounding_slack,
                             residual});
  return report;
}

BorsukWitness borsuk_witness(const MapFormula& f, double radius, const SphereNet& net) {
  if (f.domain.dim() <= f.codomain.dim())
    throw InvalidArgument("borsuk_witness: needs dim V > dim W (got " + f.domain.name() +
                          " -> " + f.codomain.name() + ")");
  if (!(net.norm == f.domain)) throw InvalidArgument("borsuk_witness: net is not on the domain sphere");
  if (!(radius > 0.0)) throw InvalidArgument("borsuk_witness: radius must be positive");

  const NormDescriptor& v = f.domain;
  auto gap = [&](const Vector& u) {
    const Vector p = radius * u;
    return f.codomain.eval(f.eval(p) - f.eval(-p));
  };

  Vector best = net.points.front();
  double best_gap = gap(best);
  for (const auto& p : net.points) {
    const double g = gap(p);
    if (g < best_gap) {
      best_gap = g;
      best = p;
    }
  }

  DescentOptions options;
  options.initial_step = std::max(net.epsilon, 1e-3);
  options.iterations = 2000;
  options.min_step = 1e-15;
  options.target = 0.0;
  options.normalize = [&v](const Vector& u) { return Vector(u / v.eval(u)); };
  Rng rng = make_rng(0, 41);
  const auto found = perturbation_descent(gap, best, options, rng);

  BorsukWitness out;
  out.point = radius * found.x;
  out.gap = found.value;
  out.distortion_lb = std::max(0.0, 2.0 * radius - out.gap);
  return out;
}

double distance_to_subspace(const Vector& point, const AffineSubspace& subspace,
                            const NormDescriptor& w) {
  const Vector rel = point - subspace.offset;
  if (subspace.basis.cols() == 0) return w.eval(rel);
  const Vector start = subspace.basis.colPivHouseholderQr().solve(rel);
  auto objective = [&](const Vector& c) { return w.eval(rel - subspace.basis * c); };
  const double initial = objective(start);
  if (initial == 0.0) return 0.0;

  DescentOptions options;
  options.initial_step = initial;
  options.iterations = 400;
  options.min_step = 1e-12 * std::max(1.0, initial);
  Rng rng = make_rng(0, 51);
  return perturbation_descent(objective, start, options, rng).value;
}

std::vector<DeviationRow> affine_deviation(const MapFormula& f, const AffineSubspace& subspace,
                                           const std::vector<double>& radii, int sample,
                                           std::uint64_t seed) {
  const int wdim = f.codomain.dim();
  if (subspace.basis.rows() != wdim || subspace.offset.size() != wdim)
    throw InvalidArgument("affine_deviation: subspace does not live in the codomain");
  if (subspace.basis.cols() >= wdim)
    throw InvalidArgument("affine_deviation: subspace dimension must be below dim W");
  if (sample < 1) throw InvalidArgument("affine_deviation: sample must be positive");

  std::vector<DeviationRow> rows;
  for (std::size_t r = 0; r < radii.size(); ++r) {
    const double radius = radii[r];
    Rng rng = make_rng(seed, 61 + r);
    std::vector<Vector> points = make_probes(f.domain, 0, radius, seed);
    for (int k = 0; k < sample; ++k) {
      Vector s = sample_sphere(f.domain, rng);
      const double scale = (k % 2 == 0) ? radius : radius * uniform_real(rng, 0.0, 1.0);
      points.push_back(scale * s);
    }
    DeviationRow row{radius, 0.0};
    for (const auto& p : points)
      row.sup_distance = std::max(row.sup_distance, distance_to_subspace(f(p), subspace, f.codomain));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace isomlab
