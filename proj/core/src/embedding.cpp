#include "isomlab/embedding.hpp"
#include "isomlab/descent.hpp"
#include "isomlab/parallel.hpp"
#include "isomlab/sphere_net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isomlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_linf(const NormDescriptor& n) {
  const auto* lp = std::get_if<LpNorm>(&n.kind());
  return lp != nullptr && std::isinf(lp->p);
}

Matrix as_placement(const Vector& x, int n, int dim) {
  return Eigen::Map<const Matrix>(x.data(), n, dim);
}

Vector as_vector(const Matrix& placement) {
  return Eigen::Map<const Vector>(placement.data(), placement.size());
}

}  // namespace

double placement_residual(const FiniteMetricSpace& s, const NormDescriptor& w,
                          const Matrix& placement) {
  if (placement.rows() != s.size() || placement.cols() != w.dim())
    throw InvalidArgument("placement shape does not match the space and norm");
  double worst = 0.0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) {
      const Vector diff = (placement.row(i) - placement.row(j)).transpose();
      worst = std::max(worst, std::abs(w.eval(diff) - s(i, j)));
    }
  return worst;
}

EmbeddingResult frechet_embed(const FiniteMetricSpace& s) {
  if (s.size() < 1) throw InvalidArgument("frechet_embed: empty space");
  EmbeddingResult out;
  out.placement = s.distances();
  out.residual = placement_residual(s, NormDescriptor::linf(s.size()), out.placement);
  out.restarts_used = 1;
  out.best_restart = 0;
  return out;
}

namespace {

Matrix frechet_start(const FiniteMetricSpace& s, int dim) {
  const int n = s.size();
  Matrix start = Matrix::Zero(n, dim);
  const int keep = std::min(n, dim);
  start.leftCols(keep) = s.distances().leftCols(keep);
  return start;
}

Matrix principal_start(const FiniteMetricSpace& s, int dim) {
  const int n = s.size();
  Matrix centered = s.distances();
  centered.rowwise() -= centered.colwise().mean();
  Eigen::JacobiSVD<Matrix> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Matrix start = Matrix::Zero(n, dim);
  const int keep = std::min<int>(dim, static_cast<int>(svd.singularValues().size()));
  for (int k = 0; k < keep; ++k) start.col(k) = svd.matrixU().col(k) * svd.singularValues()[k];
  return start;
}

struct RestartOutcome {
  double residual = kInf;
  Matrix placement;
};

}  // namespace

EmbeddingResult embed_finite(const FiniteMetricSpace& s, const NormDescriptor& w,
                             const EmbeddingOptions& options) {
  if (s.size() < 1) throw InvalidArgument("embed_finite: empty space");
  if (options.restarts < 1) throw InvalidArgument("embed_finite: restarts must be >= 1");
  const int n = s.size();
  const int dim = w.dim();
  const double diam = std::max(s.diameter(), 1e-300);

  auto stress = [&](const Vector& x) {
    const Matrix p = as_placement(x, n, dim);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double r = w.eval((p.row(i) - p.row(j)).transpose()) - s(i, j);
        sum += r * r;
      }
    return sum;
  };
  auto worst = [&](const Vector& x) { return placement_residual(s, w, as_placement(x, n, dim)); };

  std::vector<RestartOutcome> outcomes(options.restarts);
  parallel_for(outcomes.size(), options.threads, [&](std::size_t r) {
    Rng rng = make_rng(options.seed, 200 + r);
    Matrix start;
    if (r == 0) {
      start = frechet_start(s, dim);
    } else if (r == 1) {
      start = principal_start(s, dim);
    } else {
      start.resize(n, dim);
      for (int i = 0; i < n; ++i) start.row(i) = (diam * sample_ball(w, rng)).transpose();
    }
    Vector x = as_vector(start);
    double current = worst(x);
    if (current > options.isometry_threshold * 1e-3) {
      DescentOptions smooth;
      smooth.initial_step = diam;
      smooth.iterations = options.iterations;
      smooth.min_step = 1e-12 * diam;
      smooth.target = 0.0;
      const auto relaxed = perturbation_descent(stress, x, smooth, rng);
      if (worst(relaxed.x) < current) {
        x = relaxed.x;
        current = worst(x);
      }
      DescentOptions polish = smooth;
      polish.initial_step = std::max(current, 1e-9 * diam);
      const auto tight = perturbation_descent(worst, x, polish, rng);
      x = tight.x;
      current = tight.value;
    }
    outcomes[r] = {current, as_placement(x, n, dim)};
  });

  EmbeddingResult out;
  out.embeddable_threshold = options.embeddable_threshold;
  out.isometry_threshold = options.isometry_threshold;
  out.restarts_used = options.restarts;
  out.best_restart = 0;
  for (int r = 1; r < options.restarts; ++r)
    if (outcomes[r].residual < outcomes[out.best_restart].residual) out.best_restart = r;
  out.residual = outcomes[out.best_restart].residual;
  out.placement = outcomes[out.best_restart].placement;
  return out;
}

FiniteMetricSpace equilateral_space(int m, double side) {
  if (m < 2) throw InvalidArgument("equilateral space needs at least 2 points");
  if (!(side > 0.0)) throw InvalidArgument("equilateral side must be positive");
  Matrix d = Matrix::Constant(m, m, side);
  d.diagonal().setZero();
  return validate_metric(d);
}

std::vector<Vector> cube_vertices(int n, int m, double side) {
  if (n < 1 || n > 30 || m < 0 || m > (1 << n))
    throw InvalidArgument("cube_vertices: need 0 <= m <= 2^n");
  std::vector<Vector> points;
  for (int k = 0; k < m; ++k) {
    Vector p(n);
    for (int i = 0; i < n; ++i) p[i] = ((k >> (n - 1 - i)) & 1) ? side : 0.0;
    points.push_back(p);
  }
  return points;
}

EquilateralSet equilateral_search(const NormDescriptor& w, int m, double side,
                                  const EmbeddingOptions& options) {
  const auto space = equilateral_space(m, side);
  EquilateralSet out;
  out.side = side;
  if (is_linf(w) && w.dim() < 31 && m <= (1 << w.dim())) {
    out.points = cube_vertices(w.dim(), m, side);
    out.constructed = true;
    Matrix placement(m, w.dim());
    for (int k = 0; k < m; ++k) placement.row(k) = out.points[k].transpose();
    out.residual = placement_residual(space, w, placement);
    return out;
  }
  const auto found = embed_finite(space, w, options);
  out.residual = found.residual;
  out.restarts_used = found.restarts_used;
  for (int k = 0; k < m; ++k) out.points.push_back(found.placement.row(k).transpose());
  return out;
}

FiniteMetricSpace net_union_instance(const NormDescriptor& v, int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("net_union_instance: n must be >= 1");
  const auto net = sphere_net(v, 1.0 / n, seed);
  std::vector<Vector> points{Vector::Zero(v.dim())};
  points.insert(points.end(), net.points.begin(), net.points.end());
  std::vector<std::string> labels{"origin"};
  for (std::size_t k = 0; k < net.points.size(); ++k) labels.push_back("s" + std::to_string(k));

  const auto k = static_cast<Eigen::Index>(points.size());
  Matrix d = Matrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j) d(i, j) = d(j, i) = v.eval(points[i] - points[j]);
  return validate_metric(d, std::move(labels), 1e-9);
}

}  // namespace isomlab
