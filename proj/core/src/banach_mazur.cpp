#include "isomlab/banach_mazur.hpp"
#include "isomlab/descent.hpp"
#include "isomlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isomlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix stack(const SphereNet& net) {
  Matrix out(net.norm.dim(), static_cast<Eigen::Index>(net.points.size()));
  for (std::size_t k = 0; k < net.points.size(); ++k) out.col(k) = net.points[k];
  return out;
}

double net_max(const Matrix& m, const SphereNet& net, const NormDescriptor& codomain) {
  return max_column_norm(codomain, m * stack(net));
}

bool is_l2(const NormDescriptor& n) {
  const auto* lp = std::get_if<LpNorm>(&n.kind());
  return lp != nullptr && lp->p == 2.0;
}

double default_eps(int dim) { return dim <= 2 ? 0.01 : 0.1; }

}  // namespace

double net_log_error(double eps_v, double eps_w) {
  return std::log((1.0 + eps_v) / (1.0 - eps_v)) + std::log((1.0 + eps_w) / (1.0 - eps_w));
}

OperatorNormEstimate operator_norm(const LinearMap& map, const SphereNet& net) {
  if (!(net.norm == map.domain))
    throw InvalidArgument("operator_norm: net lives on " + net.norm.name() +
                          " but the map's domain is " + map.domain.name());
  if (!(net.epsilon < 1.0)) throw InvalidArgument("operator_norm: net eps must be < 1");
  OperatorNormEstimate est;
  est.lower = net_max(map.matrix, net, map.codomain);
  est.upper = est.lower * (1.0 + net.epsilon) / (1.0 - net.epsilon);
  if (is_l2(map.domain) && is_l2(map.codomain)) {
    Eigen::JacobiSVD<Matrix> svd(map.matrix);
    est.spectral = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  }
  return est;
}

BanachMazurEstimate banach_mazur_estimate(const NormDescriptor& v, const NormDescriptor& w,
                                          const BanachMazurOptions& options) {
  BanachMazurEstimate result;
  if (v.dim() != w.dim()) {
    result.value = result.upper = kInf;
    return result;
  }
  if (options.restarts < 1) throw InvalidArgument("banach_mazur_estimate: restarts must be >= 1");

  const int n = v.dim();
  result.net_eps_v = options.net_eps > 0 ? options.net_eps : default_eps(n);
  result.net_eps_w = result.net_eps_v;
  const SphereNet net_v = sphere_net(v, result.net_eps_v, options.seed);
  const SphereNet net_w = sphere_net(w, result.net_eps_w, options.seed + 1);
  const Matrix points_v = stack(net_v);
  const Matrix points_w = stack(net_w);

  auto unflatten = [n](const Vector& x) { return Eigen::Map<const Matrix>(x.data(), n, n); };
  auto objective = [&](const Vector& x) {
    const Matrix t = unflatten(x);
    Eigen::PartialPivLU<Matrix> lu(t);
    const double det = std::abs(lu.determinant());
    if (!std::isfinite(det) || det < 1e-12 * std::pow(t.norm(), n)) return kInf;
    const Matrix inv = lu.inverse();
    const double forward = max_column_norm(w, t * points_v);
    const double backward = max_column_norm(v, inv * points_w);
    if (!(forward > 0.0) || !(backward > 0.0)) return kInf;
    return std::log(forward * backward);
  };

  DescentOptions descent;
  descent.initial_step = 0.25;
  descent.iterations = options.iterations;
  descent.min_step = options.min_step;
  descent.random_directions = n * n;
  descent.target = 0.0;
  // The objective is scale free; keep iterates at unit Frobenius norm.
  descent.normalize = [](const Vector& x) {
    const double len = x.norm();
    return len > 0.0 ? Vector(x / len) : x;
  };
  // Rotations in each coordinate plane, applied on both sides.
  descent.directions = [n, &unflatten](const Vector& x) {
    std::vector<Vector> dirs;
    const Matrix t = unflatten(x);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Matrix skew = Matrix::Zero(n, n);
        skew(i, j) = 1.0;
        skew(j, i) = -1.0;
        const Matrix left = skew * t;
        const Matrix right = t * skew;
        dirs.emplace_back(Eigen::Map<const Vector>(left.data(), n * n));
        dirs.emplace_back(Eigen::Map<const Vector>(right.data(), n * n));
      }
    }
    return dirs;
  };

  struct Outcome {
    double value = kInf;
    Matrix matrix;
  };
  std::vector<Outcome> outcomes(options.restarts);
  parallel_for(outcomes.size(), options.threads, [&](std::size_t r) {
    Rng rng = make_rng(options.seed, 100 + r);
    Matrix start = Matrix::Identity(n, n);
    if (r > 0) {
      for (int attempt = 0; attempt < 100; ++attempt) {
        for (int i = 0; i < n; ++i) start.col(i) = gaussian_vector(rng, n);
        Eigen::JacobiSVD<Matrix> svd(start);
        const auto& s = svd.singularValues();
        if (s[n - 1] > 1e-3 * s[0]) break;
      }
    }
    Vector x = Eigen::Map<const Vector>(start.data(), n * n);
    auto found = perturbation_descent(objective, x, descent, rng);
    outcomes[r] = {found.value, unflatten(found.x)};
  });

  int best = -1;
  for (int r = 0; r < options.restarts; ++r) {
    result.restart_values.push_back(outcomes[r].value);
    if (std::isfinite(outcomes[r].value) && (best < 0 || outcomes[r].value < outcomes[best].value))
      best = r;
  }
  if (best < 0) throw NumericFailure("banach_mazur_estimate: every restart was singular");

  result.best_restart = best;
  const Matrix& t = outcomes[best].matrix;
  result.value = outcomes[best].value;
  result.witness = LinearMap::make(t, v, w);
  const auto fwd = operator_norm(*result.witness, net_v);
  const auto bwd = operator_norm(LinearMap::make(t.inverse(), w, v), net_w);
  result.upper = std::log(fwd.upper * bwd.upper);
  result.net_error = result.upper - result.value;
  return result;
}

KadetsReport kadets_gh_relation_report(const NormDescriptor& v, const NormDescriptor& w,
                                       int sample, std::uint64_t seed,
                                       const BranchAndBoundOptions& bnb,
                                       const BanachMazurOptions& bm) {
  if (v.dim() > 3 || w.dim() > 3)
    throw InvalidArgument("kadets_gh_relation_report: dimensions above 3 are not supported");
  if (sample < 2 || sample > 64)
    throw InvalidArgument("kadets_gh_relation_report: sample must be in [2, 64]");

  auto ball_sample = [sample](const NormDescriptor& norm, Rng& rng) {
    std::vector<Vector> pts{Vector::Zero(norm.dim())};
    while (static_cast<int>(pts.size()) < sample) pts.push_back(sample_ball(norm, rng));
    return pts;
  };
  auto to_space = [](const NormDescriptor& norm, const std::vector<Vector>& pts) {
    const auto k = static_cast<Eigen::Index>(pts.size());
    Matrix d = Matrix::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = i + 1; j < k; ++j) d(i, j) = d(j, i) = norm.eval(pts[i] - pts[j]);
    return validate_metric(d, {}, 1e-9);
  };
  auto coverage = [](const NormDescriptor& norm, const std::vector<Vector>& pts, Rng& rng) {
    double worst = 0.0;
    for (int s = 0; s < 2000; ++s) {
      const Vector q = sample_ball(norm, rng);
      double nearest = kInf;
      for (const auto& p : pts) nearest = std::min(nearest, norm.eval(q - p));
      worst = std::max(worst, nearest);
    }
    return worst;
  };

  // Both sides consume the same stream, so V == W yields identical samples.
  Rng rng_v = make_rng(seed, 11);
  Rng rng_w = make_rng(seed, 11);
  const auto pts_v = ball_sample(v, rng_v);
  const auto pts_w = ball_sample(w, rng_w);

  KadetsReport report;
  report.sample = sample;
  const auto gh = gh_branch_and_bound(to_space(v, pts_v), to_space(w, pts_w), bnb);
  report.gh_lower = gh.lower_bound;
  report.gh_upper = gh.upper_bound;
  report.gh_exact = gh.exact;
  report.coverage_v = coverage(v, pts_v, rng_v);
  report.coverage_w = coverage(w, pts_w, rng_w);

  BanachMazurOptions bm_options = bm;
  bm_options.seed = seed;
  report.banach_mazur = banach_mazur_estimate(v, w, bm_options);
  return report;
}

}  // namespace isomlab
