#pragma once

#include "isomlab/metric_space.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace isomlab {

/// A relation R between X and Y covering both sides.
struct Correspondence {
  std::vector<std::pair<int, int>> pairs;
};

/// Throws InvalidArgument unless every index of X and Y occurs in some pair.
void check_correspondence(const Correspondence& r, int x_size, int y_size);

/// sup over related pairs (x, y), (x', y') of | |xx'| - |yy'| |.
double correspondence_distortion(const Correspondence& r, const FiniteMetricSpace& x,
                                 const FiniteMetricSpace& y);

/// graph(f) united with the transpose of graph(g).
Correspondence to_correspondence(const MapPair& maps);

enum class GHMethod { kBruteForceMaps, kBruteForceCorrespondences, kBranchAndBound };

std::string to_string(GHMethod method);

/// Gromov-Hausdorff distance (factor 1/2 included) with a witness and a
/// bracket; exact results have lower == value == upper.
struct GHResult {
  double value = 0.0;
  std::variant<Correspondence, MapPair> witness;
  GHMethod method = GHMethod::kBranchAndBound;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool exact = true;
  std::int64_t nodes = 0;

  /// Witness as a list of related index pairs, sorted.
  std::vector<std::pair<int, int>> witness_pairs() const;
};

struct GHBudget {
  /// Upper limit on |Y|^|X| * |X|^|Y| for gh_exact_maps.
  double map_pairs = 1e8;
  /// Upper limit on 2^(|X| |Y|) for gh_exact_correspondences.
  double relations = static_cast<double>(1 << 22);
};

/// Exhaustive minimization of (1/2) max{dis f, codis(f, g), dis g} over all
/// map pairs. Throws BudgetExceeded when the enumeration is too large.
GHResult gh_exact_maps(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const GHBudget& budget = {});

/// Exhaustive minimization of (1/2) dis R over all correspondences.
GHResult gh_exact_correspondences(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                  const GHBudget& budget = {});

/// Parts of the admissible lower bound used for pruning.
struct GHLowerBound {
  /// (1/2) |diam X - diam Y|
  double diameter_gap = 0.0;
  /// (1/2) Hausdorff distance between {0} u {|xx'|} and {0} u {|yy'|}.
  double distance_sets = 0.0;
  double value() const { return std::max(diameter_gap, distance_sets); }
};

GHLowerBound gh_lower_bound_parts(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Admissible: never exceeds the exact Gromov-Hausdorff distance.
double gh_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

struct BranchAndBoundOptions {
  std::int64_t node_budget = 2'000'000;
  /// Workers for the first branching level; results do not depend on it.
  int threads = 1;
};

/// Branch-and-bound over partial correspondences. X points are assigned a
/// partner in Y in order of decreasing eccentricity (ties by index), then
/// every Y point left uncovered is assigned a partner in X. Exact when the
/// search finishes within budget; otherwise returns a bracket whose upper
/// end is achieved by the witness.
GHResult gh_branch_and_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                             const BranchAndBoundOptions& options = {});

}  // namespace isomlab
