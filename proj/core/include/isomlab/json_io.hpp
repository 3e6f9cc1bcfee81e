#pragma once

#include "isomlab/approx_isometry.hpp"
#include "isomlab/banach_mazur.hpp"
#include "isomlab/embedding.hpp"
#include "isomlab/gromov_hausdorff.hpp"
#include "isomlab/maps.hpp"
#include "isomlab/metric_space.hpp"
#include "isomlab/norms.hpp"

#include <json.hpp>

#include <string>

namespace isomlab {

using Json = nlohmann::ordered_json;

/// Non-finite reals become the strings "inf", "-inf" or "nan".
Json real_to_json(double x);
double real_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"labels": [...], "dist": [[...], ...]}
Json to_json(const FiniteMetricSpace& s);
FiniteMetricSpace metric_space_from_json(const Json& j);

/// {"value", "method", "lower", "upper", "exact", "nodes", "witness": [[i, j], ...]}
Json to_json(const GHResult& r);

/// {"dim": n, "kind": "lp", "p": p} | {"dim", "kind": "polytope", "functionals"}
/// | {"dim", "kind": "product", "base": {...}, "plane": {...}}
Json to_json(const NormDescriptor& n);
/// Accepts the object form or a shorthand string such as "l2:3".
NormDescriptor norm_from_json(const Json& j);

/// {"matrix": [[...]]} plus the domain and codomain norms.
Json to_json(const LinearMap& m);

Json to_json(const SphereNet& net, bool include_points = false);
Json to_json(const OperatorNormEstimate& e);
Json to_json(const BanachMazurEstimate& e);
Json to_json(const KadetsReport& r);

/// {"placement", "residual", "verdict", "restarts_used", ...}
Json to_json(const EmbeddingResult& r);
Json to_json(const EquilateralSet& s);

Json to_json(const RecoveryResult& r);
Json to_json(const EpsIsometryReport& r);
Json to_json(const BorsukWitness& w);

/// Map formulas by name:
///   {"map": "f_phi", "phi": "abs" | "zero" | "sqrt_scaled" | "table",
///    "params": [...], "V": norm, "plane": norm}
///   {"map": "linear", "matrix": [[...]], "V": norm, "W": norm}
///   {"map": "noisy_linear", "matrix", "V", "W", "noise": r, "seed": s}
///   {"map": "translation", "V": norm, "offset": [...]}
/// "sqrt_scaled" also accepts "eps" in place of "params".
MapFormula map_from_json(const Json& j);

/// Reads a JSON document; throws InvalidArgument with the parser message.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// Norm given either as a shorthand or as a path to a JSON norm file.
NormDescriptor norm_from_argument(const std::string& text);

}  // namespace isomlab
