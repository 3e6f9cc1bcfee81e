#pragma once

#include "isomlab/common.hpp"

#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace isomlab {

class NormDescriptor;

/// l_p norm, 1 <= p <= infinity.
struct LpNorm {
  double p = 2.0;
};

/// max_k |<f_k, v>| over the rows f_k of `functionals`.
struct PolytopeNorm {
  Matrix functionals;
};

/// ||(v, t)|| = plane(base(v), t) on V + R.
struct ProductNorm {
  std::shared_ptr<const NormDescriptor> base;
  std::shared_ptr<const NormDescriptor> plane;
};

/// A norm on R^dim. Immutable and cheap to copy.
class NormDescriptor {
 public:
  using Kind = std::variant<LpNorm, PolytopeNorm, ProductNorm>;

  /// l2 on R^1; lets result structs holding a norm be default-constructed.
  NormDescriptor() : dim_(1), kind_(std::make_shared<const Kind>(LpNorm{2.0})) {}

  static NormDescriptor lp(int dim, double p);
  static NormDescriptor l1(int dim) { return lp(dim, 1.0); }
  static NormDescriptor l2(int dim) { return lp(dim, 2.0); }
  static NormDescriptor linf(int dim) {
    return lp(dim, std::numeric_limits<double>::infinity());
  }
  /// Rejects functional sets that do not span the dual space.
  static NormDescriptor polytope(Matrix functionals);
  /// `plane` must be two-dimensional.
  static NormDescriptor product(const NormDescriptor& base, const NormDescriptor& plane);

  int dim() const { return dim_; }
  const Kind& kind() const { return *kind_; }

  /// Throws InvalidArgument on dimension mismatch.
  double operator()(const Vector& v) const;
  /// Same as operator() without the dimension check.
  double eval(const Vector& v) const;

  /// Short name such as "l2:3", "lp:3:2", "polytope:2[6]", "product(l2:2,linf:2)".
  std::string name() const;

  /// Extreme points of the unit ball known in closed form (vertices of the
  /// l1 and l_inf balls); empty when none are known.
  std::vector<Vector> known_extreme_points() const;

  friend bool operator==(const NormDescriptor& a, const NormDescriptor& b);

 private:
  NormDescriptor(int dim, Kind kind)
      : dim_(dim), kind_(std::make_shared<const Kind>(std::move(kind))) {}
  int dim_ = 0;
  std::shared_ptr<const Kind> kind_;
};

double norm_eval(const NormDescriptor& norm, const Vector& v);

/// Norm of every column of `cols`.
Vector column_norms(const NormDescriptor& norm, const Matrix& cols);

/// max over the columns of `cols` of their norms, vectorized where the norm
/// allows it.
double max_column_norm(const NormDescriptor& norm, const Matrix& cols);

/// Parses "l1:<dim>", "l2:<dim>", "linf:<dim>", "lp:<p>:<dim>" (p may be "inf").
NormDescriptor parse_norm_shorthand(const std::string& text);

/// The named norms shipped with the library in dimension `dim` (>= 2):
/// l1, l2, linf, lp:3, a polytope, and a product norm.
std::vector<NormDescriptor> builtin_norms(int dim);

/// Direction uniform on the Euclidean sphere, rescaled onto the unit sphere of
/// `norm`. Not uniform for the norm's own surface measure.
Vector sample_sphere(const NormDescriptor& norm, Rng& rng);

/// Point of the unit ball of `norm`: sample_sphere scaled by u^(1/dim).
Vector sample_ball(const NormDescriptor& norm, Rng& rng);

/// A dense matrix between normed spaces.
struct LinearMap {
  Matrix matrix;
  NormDescriptor domain;
  NormDescriptor codomain;

  /// Throws InvalidArgument when the matrix shape does not match the norms.
  static LinearMap make(Matrix matrix, NormDescriptor domain, NormDescriptor codomain);
  Vector operator()(const Vector& v) const { return matrix * v; }
};

}  // namespace isomlab
