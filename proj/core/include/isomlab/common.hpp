#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace isomlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shapes, out-of-range indices, invalid parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation could not be carried out within its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A numeric procedure failed (singular starts, unreachable net radius, ...).
class NumericFailure : public Error {
 public:
  using Error::Error;
};

// SplitMix64 finalizer, used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix_seed(mix_seed(seed) ^ (stream * 0xd1b54a32d192ed03ULL));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(stream_seed(seed, stream));
}

/// Standard normal vector of length `dim`.
Vector gaussian_vector(Rng& rng, int dim);

/// Uniform real in [lo, hi).
double uniform_real(Rng& rng, double lo, double hi);

}  // namespace isomlab
