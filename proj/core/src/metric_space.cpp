#include "isomlab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace isomlab {

std::string to_string(MetricAxiom axiom) {
  switch (axiom) {
    case MetricAxiom::kNotSquare: return "not-square";
    case MetricAxiom::kNotFinite: return "not-finite";
    case MetricAxiom::kNegative: return "negative-entry";
    case MetricAxiom::kNonzeroDiagonal: return "nonzero-diagonal";
    case MetricAxiom::kAsymmetry: return "asymmetry";
    case MetricAxiom::kCoincidentPoints: return "coincident-points";
    case MetricAxiom::kTriangle: return "triangle-violation";
  }
  return "unknown";
}

std::string MetricViolation::describe() const {
  std::ostringstream out;
  out << to_string(axiom);
  switch (axiom) {
    case MetricAxiom::kNotSquare:
      break;
    case MetricAxiom::kAsymmetry:
      out << " at (" << i << "," << j << ")/(" << j << "," << i << ")";
      break;
    case MetricAxiom::kTriangle:
      out << " at (" << i << "," << j << ") via " << via;
      break;
    default:
      out << " at (" << i << "," << j << ")";
  }
  return out.str();
}

namespace {

std::string summarize(const std::vector<MetricViolation>& violations) {
  std::ostringstream out;
  out << "invalid metric (" << violations.size() << " violation"
      << (violations.size() == 1 ? "" : "s") << ")";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 8);
  for (std::size_t k = 0; k < shown; ++k)
    out << (k == 0 ? ": " : "; ") << violations[k].describe();
  if (shown < violations.size()) out << "; ...";
  return out.str();
}

}  // namespace

MetricError::MetricError(std::vector<MetricViolation> violations)
    : InvalidArgument(summarize(violations)), violations_(std::move(violations)) {}

std::vector<MetricViolation> check_metric(const Matrix& m, double triangle_slack) {
  std::vector<MetricViolation> found;
  if (m.rows() != m.cols()) {
    found.push_back({MetricAxiom::kNotSquare});
    return found;
  }
  const int n = static_cast<int>(m.rows());
  bool finite = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j))) {
        found.push_back({MetricAxiom::kNotFinite, i, j});
        finite = false;
      }
    }
  }
  if (!finite) return found;

  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) found.push_back({MetricAxiom::kNonzeroDiagonal, i, i});
    for (int j = 0; j < n; ++j) {
      if (m(i, j) < 0.0) found.push_back({MetricAxiom::kNegative, i, j});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) found.push_back({MetricAxiom::kAsymmetry, i, j});
      if (m(i, j) == 0.0 || m(j, i) == 0.0)
        found.push_back({MetricAxiom::kCoincidentPoints, i, j});
    }
  }
  // Triangle checks are only meaningful on the symmetric part; report each
  // offending unordered pair (i < k) once per intermediate point.
  const double slack = triangle_slack * std::max(1.0, n > 0 ? m.maxCoeff() : 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (m(i, k) > m(i, j) + m(j, k) + slack)
          found.push_back({MetricAxiom::kTriangle, i, k, j});
      }
    }
  }
  return found;
}

FiniteMetricSpace validate_metric(const Matrix& m, std::vector<std::string> labels,
                                  double triangle_slack) {
  auto violations = check_metric(m, triangle_slack);
  if (!violations.empty()) throw MetricError(std::move(violations));
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != m.rows())
    throw InvalidArgument("label count " + std::to_string(labels.size()) +
                          " does not match matrix size " + std::to_string(m.rows()));
  if (labels.empty()) {
    labels.reserve(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) labels.push_back(std::to_string(i));
  }
  FiniteMetricSpace space;
  space.labels_ = std::move(labels);
  space.dist_ = m;
  return space;
}

double FiniteMetricSpace::diameter() const {
  return size() == 0 ? 0.0 : dist_.maxCoeff();
}

double FiniteMetricSpace::eccentricity(int i) const {
  return dist_.row(i).maxCoeff();
}

FiniteMetricSpace FiniteMetricSpace::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InvalidArgument("scale factor must be a positive finite number");
  FiniteMetricSpace out = *this;
  out.dist_ *= lambda;
  return out;
}

FiniteMetricSpace FiniteMetricSpace::permuted(std::span<const int> order) const {
  const int n = size();
  if (static_cast<int>(order.size()) != n)
    throw InvalidArgument("permutation length does not match space size");
  std::vector<int> seen(n, 0);
  for (int k : order) {
    if (k < 0 || k >= n || seen[k]++) throw InvalidArgument("not a permutation");
  }
  FiniteMetricSpace out;
  out.dist_.resize(n, n);
  out.labels_.resize(n);
  for (int a = 0; a < n; ++a) {
    out.labels_[a] = labels_[order[a]];
    for (int b = 0; b < n; ++b) out.dist_(a, b) = dist_(order[a], order[b]);
  }
  return out;
}

namespace {

void check_map(std::span<const int> f, int from, int to, const char* what) {
  if (static_cast<int>(f.size()) != from)
    throw InvalidArgument(std::string(what) + ": map length " +
                          std::to_string(f.size()) + " != domain size " +
                          std::to_string(from));
  for (int v : f) {
    if (v < 0 || v >= to)
      throw InvalidArgument(std::string(what) + ": index " + std::to_string(v) +
                            " out of range [0, " + std::to_string(to) + ")");
  }
}

}  // namespace

double distortion(std::span<const int> f, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y) {
  check_map(f, x.size(), y.size(), "distortion");
  double worst = 0.0;
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      worst = std::max(worst, std::abs(y(f[a], f[b]) - x(a, b)));
  return worst;
}

double codistortion(const MapPair& maps, const FiniteMetricSpace& x,
                    const FiniteMetricSpace& y) {
  check_map(maps.fwd, x.size(), y.size(), "codistortion (fwd)");
  check_map(maps.bwd, y.size(), x.size(), "codistortion (bwd)");
  double worst = 0.0;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b)
      worst = std::max(worst, std::abs(y(maps.fwd[a], b) - x(a, maps.bwd[b])));
  return worst;
}

double hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const FiniteMetricSpace& z) {
  if (a.empty() || b.empty())
    throw InvalidArgument("hausdorff_distance: subsets must be non-empty");
  for (int p : a)
    if (p < 0 || p >= z.size()) throw InvalidArgument("hausdorff_distance: index out of range");
  for (int p : b)
    if (p < 0 || p >= z.size()) throw InvalidArgument("hausdorff_distance: index out of range");

  auto one_sided = [&z](std::span<const int> from, std::span<const int> to) {
    double worst = 0.0;
    for (int p : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int q : to) nearest = std::min(nearest, z(p, q));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

bool isometric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, double tol) {
  if (x.size() != y.size()) return false;
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (distortion(perm, x, y) <= tol) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace isomlab
