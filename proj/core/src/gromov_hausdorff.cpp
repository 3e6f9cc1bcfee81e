#include "isomlab/gromov_hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace isomlab {

std::string to_string(GHMethod method) {
  switch (method) {
    case GHMethod::kBruteForceMaps: return "brute-force-maps";
    case GHMethod::kBruteForceCorrespondences: return "brute-force-correspondences";
    case GHMethod::kBranchAndBound: return "branch-and-bound";
  }
  return "unknown";
}

void check_correspondence(const Correspondence& r, int x_size, int y_size) {
  std::vector<char> seen_x(x_size, 0), seen_y(y_size, 0);
  for (auto [i, j] : r.pairs) {
    if (i < 0 || i >= x_size || j < 0 || j >= y_size)
      throw InvalidArgument("correspondence pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
    seen_x[i] = seen_y[j] = 1;
  }
  for (int i = 0; i < x_size; ++i)
    if (!seen_x[i]) throw InvalidArgument("correspondence misses X point " + std::to_string(i));
  for (int j = 0; j < y_size; ++j)
    if (!seen_y[j]) throw InvalidArgument("correspondence misses Y point " + std::to_string(j));
}

double correspondence_distortion(const Correspondence& r, const FiniteMetricSpace& x,
                                 const FiniteMetricSpace& y) {
  check_correspondence(r, x.size(), y.size());
  double worst = 0.0;
  for (auto [a, b] : r.pairs)
    for (auto [c, d] : r.pairs) worst = std::max(worst, std::abs(x(a, c) - y(b, d)));
  return worst;
}

Correspondence to_correspondence(const MapPair& maps) {
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(maps.fwd.size()); ++i) pairs.emplace(i, maps.fwd[i]);
  for (int j = 0; j < static_cast<int>(maps.bwd.size()); ++j) pairs.emplace(maps.bwd[j], j);
  return {{pairs.begin(), pairs.end()}};
}

std::vector<std::pair<int, int>> GHResult::witness_pairs() const {
  auto pairs = std::visit(
      [](const auto& w) {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, MapPair>)
          return to_correspondence(w).pairs;
        else
          return w.pairs;
      },
      witness);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

void require_nonempty(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.size() == 0 || y.size() == 0)
    throw InvalidArgument("Gromov-Hausdorff distance needs non-empty spaces");
}

// Advances `digits` as a base-`base` odometer; false after the last value.
bool next_assignment(std::vector<int>& digits, int base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

std::vector<std::vector<int>> all_maps(int from, int to) {
  std::vector<std::vector<int>> maps;
  std::vector<int> f(from, 0);
  do {
    maps.push_back(f);
  } while (next_assignment(f, to));
  return maps;
}

}  // namespace

GHResult gh_exact_maps(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const GHBudget& budget) {
  require_nonempty(x, y);
  const int n = x.size();
  const int m = y.size();
  const double count = std::pow(double(m), n) * std::pow(double(n), m);
  if (count > budget.map_pairs)
    throw BudgetExceeded("gh_exact_maps: " + std::to_string(count) +
                         " map pairs exceed the budget; use branch-and-bound");

  const auto fs = all_maps(n, m);
  const auto gs = all_maps(m, n);
  std::vector<double> dis_f(fs.size()), dis_g(gs.size());
  for (std::size_t a = 0; a < fs.size(); ++a) dis_f[a] = distortion(fs[a], x, y);
  for (std::size_t b = 0; b < gs.size(); ++b) dis_g[b] = distortion(gs[b], y, x);

  double best = std::numeric_limits<double>::infinity();
  std::size_t best_f = 0, best_g = 0;
  for (std::size_t a = 0; a < fs.size(); ++a) {
    if (dis_f[a] >= best) continue;
    for (std::size_t b = 0; b < gs.size(); ++b) {
      double value = std::max(dis_f[a], dis_g[b]);
      if (value >= best) continue;
      // codistortion with early exit once the pair cannot improve
      for (int i = 0; i < n && value < best; ++i)
        for (int j = 0; j < m; ++j)
          value = std::max(value, std::abs(y(fs[a][i], j) - x(i, gs[b][j])));
      if (value < best) {
        best = value;
        best_f = a;
        best_g = b;
      }
    }
  }

  GHResult result;
  result.method = GHMethod::kBruteForceMaps;
  result.value = result.lower_bound = result.upper_bound = 0.5 * best;
  result.witness = MapPair{fs[best_f], gs[best_g]};
  result.nodes = static_cast<std::int64_t>(count);
  return result;
}

namespace {

// Include/exclude enumeration of every relation in row-major cell order.
class RelationEnumerator {
 public:
  RelationEnumerator(const FiniteMetricSpace& x, const FiniteMetricSpace& y)
      : x_(x), y_(y), n_(x.size()), m_(y.size()), col_count_(m_, 0) {}

  void run() { visit(0, 0.0, 0); }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<int, int>> best_pairs;
  std::int64_t leaves = 0;

 private:
  void visit(int cell, double dis, int row_count) {
    if (cell == n_ * m_) {
      ++leaves;
      for (int c : col_count_)
        if (c == 0) return;
      if (dis < best) {
        best = dis;
        best_pairs = pairs_;
      }
      return;
    }
    const int i = cell / m_;
    const int j = cell % m_;
    const bool row_ends = (j == m_ - 1);

    // include (i, j)
    double with = dis;
    for (auto [a, b] : pairs_) with = std::max(with, std::abs(x_(i, a) - y_(j, b)));
    pairs_.emplace_back(i, j);
    ++col_count_[j];
    visit(cell + 1, with, row_ends ? 0 : row_count + 1);
    --col_count_[j];
    pairs_.pop_back();

    // exclude (i, j): a finished row must already be covered
    if (row_ends && row_count == 0) return;
    visit(cell + 1, dis, row_ends ? 0 : row_count);
  }

  const FiniteMetricSpace& x_;
  const FiniteMetricSpace& y_;
  int n_, m_;
  std::vector<int> col_count_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

GHResult gh_exact_correspondences(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                  const GHBudget& budget) {
  require_nonempty(x, y);
  const double count = std::pow(2.0, double(x.size()) * double(y.size()));
  if (count > budget.relations)
    throw BudgetExceeded("gh_exact_correspondences: 2^" +
                         std::to_string(x.size() * y.size()) +
                         " relations exceed the budget; use branch-and-bound");
  RelationEnumerator search(x, y);
  search.run();

  GHResult result;
  result.method = GHMethod::kBruteForceCorrespondences;
  result.value = result.lower_bound = result.upper_bound = 0.5 * search.best;
  result.witness = Correspondence{search.best_pairs};
  result.nodes = search.leaves;
  return result;
}

namespace {

std::vector<double> distance_values(const FiniteMetricSpace& s) {
  std::vector<double> values{0.0};
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) values.push_back(s(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// sup over a in `from` of the distance to the nearest value in sorted `to`.
double one_sided_gap(const std::vector<double>& from, const std::vector<double>& to) {
  double worst = 0.0;
  for (double a : from) {
    auto it = std::lower_bound(to.begin(), to.end(), a);
    double nearest = std::numeric_limits<double>::infinity();
    if (it != to.end()) nearest = *it - a;
    if (it != to.begin()) nearest = std::min(nearest, a - *std::prev(it));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

GHLowerBound gh_lower_bound_parts(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  GHLowerBound bound;
  bound.diameter_gap = 0.5 * std::abs(x.diameter() - y.diameter());
  const auto dx = distance_values(x);
  const auto dy = distance_values(y);
  bound.distance_sets = 0.5 * std::max(one_sided_gap(dx, dy), one_sided_gap(dy, dx));
  return bound;
}

double gh_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return gh_lower_bound_parts(x, y).value();
}

}  // namespace isomlab
