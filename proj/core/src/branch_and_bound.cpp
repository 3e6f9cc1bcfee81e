#include "isomlab/gromov_hausdorff.hpp"
#include "isomlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace isomlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Search state over partial correspondences. cost_(x, y) is the distortion
// that adding the pair (x, y) would introduce against the current pairs.
class PartialCorrespondenceSearch {
 public:
  PartialCorrespondenceSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                              double root_bound)
      : x_(x), y_(y), n_(x.size()), m_(y.size()), root_bound_(root_bound) {
    x_order_.resize(n_);
    std::iota(x_order_.begin(), x_order_.end(), 0);
    std::stable_sort(x_order_.begin(), x_order_.end(), [&](int a, int b) {
      return x_.eccentricity(a) > x_.eccentricity(b);
    });
    y_order_.resize(m_);
    std::iota(y_order_.begin(), y_order_.end(), 0);
    std::stable_sort(y_order_.begin(), y_order_.end(), [&](int a, int b) {
      return y_.eccentricity(a) > y_.eccentricity(b);
    });
    reset();
  }

  void reset() {
    pairs_.clear();
    costs_.assign(1, Matrix::Zero(n_, m_));
    assigned_.assign(n_, 0);
    covered_.assign(m_, 0);
  }

  int first_x() const { return x_order_[0]; }

  /// Children of the current node in exploration order, as (x, y) pairs.
  std::vector<std::pair<int, int>> children(int level, double dis) const {
    std::vector<std::pair<int, int>> out;
    const Matrix& cost = costs_.back();
    if (level < n_) {
      const int xi = x_order_[level];
      for (int yj = 0; yj < m_; ++yj) out.emplace_back(xi, yj);
    } else {
      const int yj = next_uncovered();
      if (yj < 0) return out;
      for (int xi = 0; xi < n_; ++xi) out.emplace_back(xi, yj);
    }
    auto key = [&](const std::pair<int, int>& p) {
      return std::make_pair(std::max(dis, cost(p.first, p.second)),
                            std::abs(x_.eccentricity(p.first) - y_.eccentricity(p.second)));
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
  }

  int next_uncovered() const {
    for (int yj : y_order_)
      if (!covered_[yj]) return yj;
    return -1;
  }

  double push(int xi, int yj, double dis) {
    const Matrix& cost = costs_.back();
    const double child = std::max(dis, cost(xi, yj));
    Matrix next = cost;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < m_; ++b)
        next(a, b) = std::max(next(a, b), std::abs(x_(a, xi) - y_(b, yj)));
    costs_.push_back(std::move(next));
    pairs_.emplace_back(xi, yj);
    ++assigned_[xi];
    ++covered_[yj];
    return child;
  }

  void pop() {
    auto [xi, yj] = pairs_.back();
    pairs_.pop_back();
    costs_.pop_back();
    --assigned_[xi];
    --covered_[yj];
  }

  // Every unassigned X point and uncovered Y point must still receive a
  // partner; the cheapest option bounds the final distortion from below.
  double node_bound(int level, double dis) const {
    double bound = std::max(dis, root_bound_);
    const Matrix& cost = costs_.back();
    for (int l = std::min(level, n_); l < n_; ++l) {
      const int xi = x_order_[l];
      bound = std::max(bound, cost.row(xi).minCoeff());
    }
    for (int yj = 0; yj < m_; ++yj)
      if (!covered_[yj]) bound = std::max(bound, cost.col(yj).minCoeff());
    return bound;
  }

  /// Depth-first search below the current node; `best` is updated only on
  /// strict improvement, so the witness is the first optimum in DFS order.
  void dfs(int level, double dis) {
    const double bound = node_bound(level, dis);
    if (bound >= best) return;
    if (nodes >= budget) {
      exhausted = true;
      open_bound = std::min(open_bound, bound);
      return;
    }
    ++nodes;
    if (level >= n_ && next_uncovered() < 0) {
      best = dis;
      best_pairs = pairs_;
      return;
    }
    for (auto [xi, yj] : children(level, dis)) {
      const double child = push(xi, yj, dis);
      dfs(level + 1, child);
      pop();
    }
  }

  /// Cheapest-child descent; always reaches a feasible correspondence.
  std::pair<double, std::vector<std::pair<int, int>>> greedy() {
    reset();
    double dis = 0.0;
    int level = 0;
    while (true) {
      auto kids = children(level, dis);
      if (kids.empty()) break;
      dis = push(kids.front().first, kids.front().second, dis);
      ++level;
    }
    auto result = std::make_pair(dis, pairs_);
    reset();
    return result;
  }

  double best = kInf;
  std::vector<std::pair<int, int>> best_pairs;
  std::int64_t nodes = 0;
  std::int64_t budget = 0;
  bool exhausted = false;
  double open_bound = kInf;

 private:
  const FiniteMetricSpace& x_;
  const FiniteMetricSpace& y_;
  int n_, m_;
  double root_bound_;
  std::vector<int> x_order_, y_order_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Matrix> costs_;
  std::vector<int> assigned_, covered_;
};

struct SubtreeOutcome {
  double best = kInf;
  std::vector<std::pair<int, int>> pairs;
  std::int64_t nodes = 0;
  bool exhausted = false;
  double open_bound = kInf;
};

bool same_matrix(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return x.size() == y.size() && x.distances() == y.distances();
}

}  // namespace

GHResult gh_branch_and_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                             const BranchAndBoundOptions& options) {
  if (x.size() == 0 || y.size() == 0)
    throw InvalidArgument("Gromov-Hausdorff distance needs non-empty spaces");
  if (options.node_budget < 1) throw InvalidArgument("node budget must be positive");

  // Work in distortion units; halve at the end.
  const double root = 2.0 * gh_lower_bound(x, y);

  GHResult result;
  result.method = GHMethod::kBranchAndBound;

  PartialCorrespondenceSearch probe(x, y, root);
  auto [incumbent, incumbent_pairs] = probe.greedy();
  if (same_matrix(x, y)) {
    incumbent = 0.0;
    incumbent_pairs.clear();
    for (int i = 0; i < x.size(); ++i) incumbent_pairs.emplace_back(i, i);
  }

  auto finish = [&](double best, std::vector<std::pair<int, int>> pairs, double lower,
                    std::int64_t nodes) {
    std::sort(pairs.begin(), pairs.end());
    result.witness = Correspondence{std::move(pairs)};
    result.value = result.upper_bound = 0.5 * best;
    result.lower_bound = 0.5 * std::min(best, lower);
    result.exact = (result.lower_bound == result.upper_bound);
    result.nodes = nodes;
    return result;
  };

  if (root >= incumbent) return finish(incumbent, incumbent_pairs, incumbent, 0);

  // Split on the partner of the first X point. Each subtree searches on its
  // own with the greedy incumbent, so results are independent of scheduling.
  const auto first = probe.children(0, 0.0);
  const auto share = std::max<std::int64_t>(
      1, options.node_budget / static_cast<std::int64_t>(first.size()));
  std::vector<SubtreeOutcome> outcomes(first.size());
  parallel_for(first.size(), options.threads, [&](std::size_t k) {
    PartialCorrespondenceSearch search(x, y, root);
    search.best = incumbent;
    search.budget = share;
    const double dis = search.push(first[k].first, first[k].second, 0.0);
    search.dfs(1, dis);
    outcomes[k] = {search.best, search.best_pairs, search.nodes, search.exhausted,
                   search.open_bound};
  });

  double best = incumbent;
  auto best_pairs = incumbent_pairs;
  double open = kInf;
  std::int64_t nodes = 0;
  for (const auto& o : outcomes) {
    nodes += o.nodes;
    if (o.exhausted) open = std::min(open, o.open_bound);
    if (o.best < best) {
      best = o.best;
      best_pairs = o.pairs;
    }
  }
  const double lower = std::max(root, std::min(best, open));
  return finish(best, std::move(best_pairs), lower, nodes);
}

}  // namespace isomlab
