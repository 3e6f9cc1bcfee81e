#pragma once

// Helpers shared by the unit tests and the acceptance binary. The GH oracle
// here is deliberately independent of the library: it enumerates every
// relation as a bitmask.

#include "isomlab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace isomlab::testing {

/// Random metric on n points with integer distances in [1, max_d], by
/// rejection.
inline FiniteMetricSpace random_integer_metric(int n, std::mt19937_64& rng, int max_d = 5) {
  std::uniform_int_distribution<int> pick(1, max_d);
  while (true) {
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = pick(rng);
    if (check_metric(d).empty()) return validate_metric(d);
  }
}

/// Random metric with real distances: shortest-path closure of random
/// weights in [lo, hi].
inline FiniteMetricSpace random_real_metric(int n, std::mt19937_64& rng, double lo = 0.5,
                                            double hi = 3.0) {
  std::uniform_real_distribution<double> pick(lo, hi);
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = pick(rng);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return validate_metric(d);
}

/// All metrics on 2 and 3 points with distances in {1, ..., max_d}.
inline std::vector<FiniteMetricSpace> all_small_integer_metrics(int max_d = 5) {
  std::vector<FiniteMetricSpace> out;
  for (int a = 1; a <= max_d; ++a) {
    Matrix d(2, 2);
    d << 0, a, a, 0;
    out.push_back(validate_metric(d));
  }
  for (int a = 1; a <= max_d; ++a)
    for (int b = 1; b <= max_d; ++b)
      for (int c = 1; c <= max_d; ++c) {
        Matrix d(3, 3);
        d << 0, a, b, a, 0, c, b, c, 0;
        if (check_metric(d).empty()) out.push_back(validate_metric(d));
      }
  return out;
}

/// d_GH by enumerating every relation between X and Y as a bitmask; needs
/// |X| |Y| <= 20.
inline double oracle_gh(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const int n = x.size(), m = y.size();
  const int bits = n * m;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << bits); ++mask) {
    std::vector<bool> row(n), col(m);
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < bits; ++b)
      if (mask >> b & 1u) {
        pairs.emplace_back(b / m, b % m);
        row[b / m] = true;
        col[b % m] = true;
      }
    if (std::find(row.begin(), row.end(), false) != row.end()) continue;
    if (std::find(col.begin(), col.end(), false) != col.end()) continue;
    double dis = 0.0;
    for (auto [a, p] : pairs)
      for (auto [b, q] : pairs) dis = std::max(dis, std::abs(x(a, b) - y(p, q)));
    best = std::min(best, dis);
  }
  return best / 2.0;
}

}  // namespace isomlab::testing
