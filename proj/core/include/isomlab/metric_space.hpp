#pragma once

#include "isomlab/common.hpp"

#include <span>
#include <string>
#include <vector>

namespace isomlab {

/// Which metric axiom a matrix entry (or triple) breaks.
enum class MetricAxiom {
  kNotSquare,
  kNotFinite,
  kNegative,
  kNonzeroDiagonal,
  kAsymmetry,
  kCoincidentPoints,
  kTriangle,
};

std::string to_string(MetricAxiom axiom);

/// One violated axiom. For kAsymmetry (i, j) and (j, i) disagree; for
/// kTriangle dist(i, k) > dist(i, via) + dist(via, k).
struct MetricViolation {
  MetricAxiom axiom;
  int i = -1;
  int j = -1;
  int via = -1;
  std::string describe() const;
};

/// Thrown by validate_metric; carries every violation found.
class MetricError : public InvalidArgument {
 public:
  explicit MetricError(std::vector<MetricViolation> violations);
  const std::vector<MetricViolation>& violations() const { return violations_; }

 private:
  std::vector<MetricViolation> violations_;
};

/// Every axiom violation of `m`, in row-major order. Triangle checks use an
/// absolute slack of `triangle_slack * max(1, max entry)` so that distances
/// computed from norms are not rejected over rounding.
std::vector<MetricViolation> check_metric(const Matrix& m,
                                          double triangle_slack = 1e-12);

/// A finite set of labeled points with a validated distance matrix.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  int size() const { return static_cast<int>(dist_.rows()); }
  double operator()(int i, int j) const { return dist_(i, j); }
  const Matrix& distances() const { return dist_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double diameter() const;
  /// max_j dist(i, j)
  double eccentricity(int i) const;

  /// Same points, distances multiplied by lambda > 0.
  FiniteMetricSpace scaled(double lambda) const;
  /// Points reordered so that point k of the result is point order[k] here.
  FiniteMetricSpace permuted(std::span<const int> order) const;

  friend FiniteMetricSpace validate_metric(const Matrix&, std::vector<std::string>,
                                           double);

 private:
  std::vector<std::string> labels_;
  Matrix dist_;
};

/// Validates `m` and builds the space; throws MetricError listing every
/// violation. Empty `labels` become "0", "1", ...
FiniteMetricSpace validate_metric(const Matrix& m, std::vector<std::string> labels = {},
                                  double triangle_slack = 1e-12);

/// Largest change of a pairwise distance under the index map `f` : X -> Y.
double distortion(std::span<const int> f, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y);

/// A pair of maps f : X -> Y and g : Y -> X.
struct MapPair {
  std::vector<int> fwd;
  std::vector<int> bwd;
};

/// sup over (x, y) of | |f(x) y| - |x g(y)| |.
double codistortion(const MapPair& maps, const FiniteMetricSpace& x,
                    const FiniteMetricSpace& y);

/// Hausdorff distance between two non-empty index subsets of `z`.
double hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const FiniteMetricSpace& z);

/// True when some bijection preserves every distance exactly (brute force,
/// intended for spaces of at most ~8 points).
bool isometric(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
               double tol = 0.0);

}  // namespace isomlab
