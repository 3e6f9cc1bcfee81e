#include "isomlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace isomlab {

namespace {

std::string format_p(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream out;
  out << p;
  return out.str();
}

double lp_value(const Vector& v, double p) {
  const double peak = v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  if (std::isinf(p) || peak == 0.0) return peak;
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) sum += std::pow(std::abs(v[i]) / peak, p);
  return peak * std::pow(sum, 1.0 / p);
}

}  // namespace

NormDescriptor NormDescriptor::lp(int dim, double p) {
  if (dim < 1) throw InvalidArgument("norm dimension must be positive");
  if (std::isnan(p) || p < 1.0)
    throw InvalidArgument("l_p requires p >= 1 (got " + format_p(p) + ")");
  return NormDescriptor(dim, LpNorm{p});
}

NormDescriptor NormDescriptor::polytope(Matrix functionals) {
  if (functionals.cols() < 1 || functionals.rows() < 1)
    throw InvalidArgument("polytope norm needs at least one functional");
  if (!functionals.allFinite()) throw InvalidArgument("polytope functionals must be finite");
  Eigen::FullPivLU<Matrix> lu(functionals);
  if (lu.rank() < functionals.cols())
    throw InvalidArgument("polytope functionals do not span the dual space; the unit ball "
                          "would be unbounded");
  const int dim = static_cast<int>(functionals.cols());
  return NormDescriptor(dim, PolytopeNorm{std::move(functionals)});
}

NormDescriptor NormDescriptor::product(const NormDescriptor& base,
                                       const NormDescriptor& plane) {
  if (plane.dim() != 2) throw InvalidArgument("product norm needs a two-dimensional plane norm");
  return NormDescriptor(base.dim() + 1,
                        ProductNorm{std::make_shared<const NormDescriptor>(base),
                                    std::make_shared<const NormDescriptor>(plane)});
}

double NormDescriptor::operator()(const Vector& v) const {
  if (v.size() != dim_)
    throw InvalidArgument("norm " + name() + " applied to a vector of dimension " +
                          std::to_string(v.size()));
  return eval(v);
}

double NormDescriptor::eval(const Vector& v) const {
  return std::visit(
      [&v](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LpNorm>) {
          return lp_value(v, k.p);
        } else if constexpr (std::is_same_v<K, PolytopeNorm>) {
          return (k.functionals * v).cwiseAbs().maxCoeff();
        } else {
          const auto n = v.size() - 1;
          Eigen::Vector2d folded(k.base->eval(v.head(n)), v[n]);
          return k.plane->eval(folded);
        }
      },
      *kind_);
}

Vector column_norms(const NormDescriptor& norm, const Matrix& cols) {
  if (const auto* lp = std::get_if<LpNorm>(&norm.kind())) {
    if (std::isinf(lp->p)) return cols.cwiseAbs().colwise().maxCoeff().transpose();
    if (lp->p == 1.0) return cols.cwiseAbs().colwise().sum().transpose();
    if (lp->p == 2.0) return cols.colwise().norm().transpose();
  } else if (const auto* poly = std::get_if<PolytopeNorm>(&norm.kind())) {
    return (poly->functionals * cols).cwiseAbs().colwise().maxCoeff().transpose();
  }
  Vector out(cols.cols());
  for (Eigen::Index j = 0; j < cols.cols(); ++j) out[j] = norm.eval(cols.col(j));
  return out;
}

double max_column_norm(const NormDescriptor& norm, const Matrix& cols) {
  if (cols.cols() == 0) return 0.0;
  if (const auto* lp = std::get_if<LpNorm>(&norm.kind())) {
    if (std::isinf(lp->p)) return cols.cwiseAbs().maxCoeff();
    if (lp->p == 1.0) return cols.cwiseAbs().colwise().sum().maxCoeff();
    if (lp->p == 2.0) return cols.colwise().norm().maxCoeff();
  } else if (const auto* poly = std::get_if<PolytopeNorm>(&norm.kind())) {
    return (poly->functionals * cols).cwiseAbs().maxCoeff();
  }
  double best = 0.0;
  for (Eigen::Index j = 0; j < cols.cols(); ++j) best = std::max(best, norm.eval(cols.col(j)));
  return best;
}

std::string NormDescriptor::name() const {
  return std::visit(
      [this](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        const auto d = std::to_string(dim_);
        if constexpr (std::is_same_v<K, LpNorm>) {
          if (k.p == 1.0) return "l1:" + d;
          if (k.p == 2.0) return "l2:" + d;
          if (std::isinf(k.p)) return "linf:" + d;
          return "lp:" + format_p(k.p) + ":" + d;
        } else if constexpr (std::is_same_v<K, PolytopeNorm>) {
          return "polytope:" + d + "[" + std::to_string(k.functionals.rows()) + "]";
        } else {
          return "product(" + k.base->name() + "," + k.plane->name() + ")";
        }
      },
      *kind_);
}

std::vector<Vector> NormDescriptor::known_extreme_points() const {
  std::vector<Vector> points;
  const auto* lp = std::get_if<LpNorm>(kind_.get());
  if (lp == nullptr) return points;
  if (lp->p == 1.0) {
    for (int i = 0; i < dim_; ++i) {
      Vector e = Vector::Zero(dim_);
      e[i] = 1.0;
      points.push_back(e);
      points.push_back(-e);
    }
  } else if (std::isinf(lp->p) && dim_ <= 12) {
    for (int mask = 0; mask < (1 << dim_); ++mask) {
      Vector s(dim_);
      for (int i = 0; i < dim_; ++i) s[i] = (mask >> i & 1) ? -1.0 : 1.0;
      points.push_back(s);
    }
  }
  return points;
}

bool operator==(const NormDescriptor& a, const NormDescriptor& b) {
  if (a.dim_ != b.dim_ || a.kind_->index() != b.kind_->index()) return false;
  if (const auto* p = std::get_if<LpNorm>(a.kind_.get()))
    return p->p == std::get<LpNorm>(*b.kind_).p;
  if (const auto* p = std::get_if<PolytopeNorm>(a.kind_.get()))
    return p->functionals == std::get<PolytopeNorm>(*b.kind_).functionals;
  const auto& pa = std::get<ProductNorm>(*a.kind_);
  const auto& pb = std::get<ProductNorm>(*b.kind_);
  return *pa.base == *pb.base && *pa.plane == *pb.plane;
}

double norm_eval(const NormDescriptor& norm, const Vector& v) { return norm(v); }

NormDescriptor parse_norm_shorthand(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  for (std::string part; std::getline(stream, part, ':');) parts.push_back(part);

  auto to_dim = [&](const std::string& s) {
    std::size_t used = 0;
    int dim = 0;
    try {
      dim = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || dim < 1)
      throw InvalidArgument("bad dimension '" + s + "' in norm '" + text + "'");
    return dim;
  };
  auto to_p = [&](const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw InvalidArgument("bad exponent '" + s + "' in norm '" + text + "'");
    return p;
  };

  if (parts.size() == 2 && parts[0] == "l1") return NormDescriptor::l1(to_dim(parts[1]));
  if (parts.size() == 2 && parts[0] == "l2") return NormDescriptor::l2(to_dim(parts[1]));
  if (parts.size() == 2 && parts[0] == "linf") return NormDescriptor::linf(to_dim(parts[1]));
  if (parts.size() == 3 && parts[0] == "lp")
    return NormDescriptor::lp(to_dim(parts[2]), to_p(parts[1]));
  throw InvalidArgument("unrecognized norm shorthand '" + text +
                        "' (expected l1:<dim>, l2:<dim>, linf:<dim> or lp:<p>:<dim>)");
}

std::vector<NormDescriptor> builtin_norms(int dim) {
  if (dim < 2) throw InvalidArgument("built-in norms are defined for dim >= 2");
  std::vector<NormDescriptor> norms{NormDescriptor::l1(dim), NormDescriptor::l2(dim),
                                    NormDescriptor::linf(dim), NormDescriptor::lp(dim, 3.0)};
  if (dim == 2) {
    // regular hexagon
    Matrix f(3, 2);
    for (int k = 0; k < 3; ++k) {
      const double angle = k * std::numbers::pi / 3.0;
      f(k, 0) = std::cos(angle);
      f(k, 1) = std::sin(angle);
    }
    norms.push_back(NormDescriptor::polytope(f));
  } else {
    // cube with its corners cut by the planes |x_1 + ... + x_n| = n/2
    Matrix f = Matrix::Identity(dim + 1, dim);
    f.row(dim).setConstant(2.0 / dim);
    norms.push_back(NormDescriptor::polytope(f));
  }
  norms.push_back(
      NormDescriptor::product(NormDescriptor::l2(dim - 1), NormDescriptor::linf(2)));
  return norms;
}

Vector sample_sphere(const NormDescriptor& norm, Rng& rng) {
  Vector g;
  double length = 0.0;
  do {
    g = gaussian_vector(rng, norm.dim());
    length = norm.eval(g);
  } while (!(length > 1e-300));
  return g / length;
}

Vector sample_ball(const NormDescriptor& norm, Rng& rng) {
  Vector s = sample_sphere(norm, rng);
  const double u = uniform_real(rng, 0.0, 1.0);
  return s * std::pow(u, 1.0 / norm.dim());
}

LinearMap LinearMap::make(Matrix matrix, NormDescriptor domain, NormDescriptor codomain) {
  if (matrix.cols() != domain.dim() || matrix.rows() != codomain.dim())
    throw InvalidArgument("linear map is " + std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + " but maps " + domain.name() +
                          " -> " + codomain.name());
  return LinearMap{std::move(matrix), std::move(domain), std::move(codomain)};
}

}  // namespace isomlab
