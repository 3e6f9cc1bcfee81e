#include "isomlab/json_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace isomlab {

namespace {

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidArgument(std::string(what) + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string(what) + ": bad field \"" + key + "\": " + e.what());
  }
}

}  // namespace

Json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InvalidArgument("expected a real number, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(real_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidArgument("matrix rows must be arrays of equal length");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = real_from_json(row.at(k));
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(real_to_json(v[i]));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("vector must be an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = real_from_json(j.at(i));
  return v;
}

Json to_json(const FiniteMetricSpace& s) {
  return Json{{"labels", s.labels()}, {"dist", matrix_to_json(s.distances())}};
}

FiniteMetricSpace metric_space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dist"))
    throw InvalidArgument("metric space JSON needs a \"dist\" matrix");
  const Matrix d = matrix_from_json(j.at("dist"));
  if (d.rows() != d.cols()) throw MetricError({{MetricAxiom::kNotSquare}});
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels"))
      labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  }
  return validate_metric(d, std::move(labels));
}

Json to_json(const GHResult& r) {
  Json witness = Json::array();
  for (auto [i, j] : r.witness_pairs()) witness.push_back({i, j});
  return Json{{"value", real_to_json(r.value)},
              {"method", to_string(r.method)},
              {"lower", real_to_json(r.lower_bound)},
              {"upper", real_to_json(r.upper_bound)},
              {"exact", r.exact},
              {"nodes", r.nodes},
              {"witness", std::move(witness)}};
}

Json to_json(const NormDescriptor& n) {
  return std::visit(
      [&n](const auto& k) -> Json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LpNorm>) {
          return Json{{"dim", n.dim()}, {"kind", "lp"}, {"p", real_to_json(k.p)}};
        } else if constexpr (std::is_same_v<K, PolytopeNorm>) {
          return Json{{"dim", n.dim()}, {"kind", "polytope"},
                      {"functionals", matrix_to_json(k.functionals)}};
        } else {
          return Json{{"dim", n.dim()}, {"kind", "product"},
                      {"base", to_json(*k.base)}, {"plane", to_json(*k.plane)}};
        }
      },
      n.kind());
}

NormDescriptor norm_from_json(const Json& j) {
  if (j.is_string()) return parse_norm_shorthand(j.get<std::string>());
  const auto kind = field<std::string>(j, "kind", "norm");
  NormDescriptor norm = NormDescriptor::l2(1);
  if (kind == "lp") {
    norm = NormDescriptor::lp(field<int>(j, "dim", "norm"), real_from_json(j.at("p")));
  } else if (kind == "polytope") {
    if (!j.contains("functionals")) throw InvalidArgument("polytope norm needs \"functionals\"");
    norm = NormDescriptor::polytope(matrix_from_json(j.at("functionals")));
  } else if (kind == "product") {
    if (!j.contains("base") || !j.contains("plane"))
      throw InvalidArgument("product norm needs \"base\" and \"plane\"");
    norm = NormDescriptor::product(norm_from_json(j.at("base")), norm_from_json(j.at("plane")));
  } else {
    throw InvalidArgument("unknown norm kind \"" + kind + "\"");
  }
  if (j.contains("dim") && j.at("dim").get<int>() != norm.dim())
    throw InvalidArgument("norm declares dim " + j.at("dim").dump() + " but has dimension " +
                          std::to_string(norm.dim()));
  return norm;
}

Json to_json(const LinearMap& m) {
  return Json{{"matrix", matrix_to_json(m.matrix)},
              {"domain", to_json(m.domain)},
              {"codomain", to_json(m.codomain)}};
}

Json to_json(const SphereNet& net, bool include_points) {
  Json out{{"norm", net.norm.name()},
           {"epsilon", real_to_json(net.epsilon)},
           {"size", net.points.size()},
           {"pool_size", net.pool_size},
           {"audited_radius", real_to_json(net.audited_radius)},
           {"audit_samples", net.audit_samples}};
  if (include_points) {
    Json pts = Json::array();
    for (const auto& p : net.points) pts.push_back(vector_to_json(p));
    out["points"] = std::move(pts);
  }
  return out;
}

Json to_json(const OperatorNormEstimate& e) {
  Json out{{"lower", real_to_json(e.lower)}, {"upper", real_to_json(e.upper)}};
  if (e.spectral) out["spectral"] = real_to_json(*e.spectral);
  return out;
}

Json to_json(const BanachMazurEstimate& e) {
  Json restarts = Json::array();
  for (double v : e.restart_values) restarts.push_back(real_to_json(v));
  return Json{{"value", real_to_json(e.value)},
              {"error_bars", {{"lower", real_to_json(e.value)},
                              {"upper", real_to_json(e.upper)},
                              {"net_error", real_to_json(e.net_error)}}},
              {"net_eps", {real_to_json(e.net_eps_v), real_to_json(e.net_eps_w)}},
              {"best_restart", e.best_restart},
              {"restart_values", std::move(restarts)},
              {"witness", e.witness ? Json{{"matrix", matrix_to_json(e.witness->matrix)}}
                                    : Json(nullptr)}};
}

Json to_json(const KadetsReport& r) {
  return Json{{"sample", r.sample},
              {"gh_lower", real_to_json(r.gh_lower)},
              {"gh_upper", real_to_json(r.gh_upper)},
              {"gh_exact", r.gh_exact},
              {"coverage", {real_to_json(r.coverage_v), real_to_json(r.coverage_w)}},
              {"error_bars", {{"gh_lower", real_to_json(r.gh_lower)},
                              {"gh_upper", real_to_json(r.gh_upper)}}},
              {"banach_mazur", to_json(r.banach_mazur)}};
}

Json to_json(const EmbeddingResult& r) {
  return Json{{"placement", matrix_to_json(r.placement)},
              {"residual", real_to_json(r.residual)},
              {"verdict", r.verdict()},
              {"restarts_used", r.restarts_used},
              {"best_restart", r.best_restart},
              {"thresholds", {{"embeddable", r.embeddable_threshold},
                              {"isometry", r.isometry_threshold}}}};
}

Json to_json(const EquilateralSet& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(vector_to_json(p));
  return Json{{"points", std::move(pts)},
              {"side", real_to_json(s.side)},
              {"residual", real_to_json(s.residual)},
              {"restarts_used", s.restarts_used},
              {"constructed", s.constructed}};
}

Json to_json(const RecoveryResult& r) {
  Json table = Json::array();
  for (const auto& row : r.table) {
    Json res = Json::array();
    for (double x : row.residual) res.push_back(real_to_json(x));
    table.push_back({{"scale", real_to_json(row.scale)},
                     {"residual", std::move(res)},
                     {"cauchy", real_to_json(row.cauchy)}});
  }
  return Json{{"matrix", matrix_to_json(r.map.matrix)},
              {"translation", vector_to_json(r.translation)},
              {"linearity_residual", real_to_json(r.linearity_residual)},
              {"isometry_residual", real_to_json(r.isometry_residual)},
              {"divergent", r.divergent},
              {"convergence", std::move(table)}};
}

Json to_json(const EpsIsometryReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"constant", c.name},
                      {"theorem", c.source},
                      {"M", real_to_json(c.bound)},
                      {"satisfied", c.satisfied},
                      {"max_residual", real_to_json(c.max_residual)}});
  return Json{{"eps", real_to_json(r.eps)},
              {"eps_observed", real_to_json(r.eps_observed)},
              {"delta", real_to_json(r.delta)},
              {"delta_observed", real_to_json(r.delta_observed)},
              {"vacuous", r.vacuous},
              {"rounding_slack", real_to_json(r.rounding_slack)},
              {"probe_radius", real_to_json(r.probe_radius)},
              {"probes", r.probes},
              {"bound_checks", std::move(checks)}};
}

Json to_json(const BorsukWitness& w) {
  return Json{{"point", vector_to_json(w.point)},
              {"gap", real_to_json(w.gap)},
              {"distortion_lb", real_to_json(w.distortion_lb)}};
}

MapFormula map_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "map", "map formula");
  if (kind == "f_phi") {
    const auto phi_name = field<std::string>(j, "phi", "f_phi");
    std::vector<double> params;
    if (j.contains("params")) params = j.at("params").get<std::vector<double>>();
    if (params.empty() && j.contains("eps")) params.push_back(j.at("eps").get<double>());
    if (!j.contains("V") || !j.contains("plane"))
      throw InvalidArgument("f_phi needs \"V\" and \"plane\" norms");
    return make_f_phi(norm_from_json(j.at("V")), norm_from_json(j.at("plane")),
                      make_phi(phi_name, params));
  }
  if (kind == "linear" || kind == "noisy_linear") {
    if (!j.contains("matrix") || !j.contains("V") || !j.contains("W"))
      throw InvalidArgument(kind + " needs \"matrix\", \"V\" and \"W\"");
    auto map = LinearMap::make(matrix_from_json(j.at("matrix")), norm_from_json(j.at("V")),
                               norm_from_json(j.at("W")));
    if (kind == "linear") return make_linear(map);
    return make_noisy_linear(map, field<double>(j, "noise", "noisy_linear"),
                             j.value("seed", std::uint64_t{0}));
  }
  if (kind == "translation") {
    if (!j.contains("V") || !j.contains("offset"))
      throw InvalidArgument("translation needs \"V\" and \"offset\"");
    return make_translation(norm_from_json(j.at("V")), vector_from_json(j.at("offset")));
  }
  throw InvalidArgument("unknown map \"" + kind +
                        "\" (expected f_phi, linear, noisy_linear, translation)");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + path + ": " + e.what());
  }
}

NormDescriptor norm_from_argument(const std::string& text) {
  if (std::filesystem::exists(text)) return norm_from_json(read_json_file(text));
  return parse_norm_shorthand(text);
}

}  // namespace isomlab
