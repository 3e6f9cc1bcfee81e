#include "isomlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>

namespace isomlab {

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::kPass: return "pass";
    case RowStatus::kFail: return "fail";
    case RowStatus::kExpectedFail: return "expected-fail";
    case RowStatus::kInfo: return "info";
  }
  return "unknown";
}

const std::vector<std::string>& known_anchors() {
  static const std::vector<std::string> anchors{
      "distortion",
      "codistortion",
      "two-map formulation of d_GH",
      "correspondence equivalent",
      "Proposition on conical sets",
      "Hyers–Ulam theorem",
      "Dilworth",
      "Šemrl–Väisälä scaling limit",
      "Banach–Mazur distance",
      "John's theorem",
      "Kadets distance definition",
      "Borsuk–Ulam witness",
      "finite net construction",
      "finite embedding solver",
      "Petty's equilateral bound",
      "W_V product-norm construction",
  };
  return anchors;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> tolerances{
      {"gh_agreement", 1e-12}, {"scaling", 1e-12},     {"isometry", 1e-12},
      {"deviation", 1e-9},     {"embedding", 1e-9},    {"embeddable", 1e-6},
      {"borsuk_gap", 1e-9},    {"bm_golden", 1e-2},    {"frechet", 1e-12},
  };
  return tolerances;
}

double ExperimentConfig::tol(const std::string& name, double fallback) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  if (auto it = default_tolerances().find(name); it != default_tolerances().end())
    return it->second;
  return fallback;
}

Json ExperimentConfig::echo() const {
  Json tols = Json::object();
  for (const auto& [name, value] : default_tolerances()) tols[name] = tol(name, value);
  for (const auto& [name, value] : tolerances) tols[name] = value;
  return Json{{"seed", seed}, {"budget_nodes", budget_nodes}, {"tolerances", std::move(tols)}};
}

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw InvalidArgument("tolerance must look like name=value, got '" + text + "'");
  const std::string name = text.substr(0, eq);
  const std::string raw = text.substr(eq + 1);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != raw.size() || !(value > 0.0) || !std::isfinite(value))
    throw InvalidArgument("tolerance '" + name + "' must be a positive number, got '" + raw + "'");
  return {name, value};
}

void Report::check_at_most(std::string claim, std::string anchor, double value,
                           double tolerance) {
  rows.push_back({std::move(claim), std::move(anchor), value, tolerance,
                  value <= tolerance ? RowStatus::kPass : RowStatus::kFail});
}

void Report::check(std::string claim, std::string anchor, double value, double tolerance,
                   bool ok) {
  rows.push_back({std::move(claim), std::move(anchor), value, tolerance,
                  ok ? RowStatus::kPass : RowStatus::kFail});
}

void Report::expect_violation(std::string claim, std::string anchor, double value,
                              double tolerance, bool violated) {
  rows.push_back({std::move(claim), std::move(anchor), value, tolerance,
                  violated ? RowStatus::kExpectedFail : RowStatus::kPass});
}

void Report::info(std::string claim, std::string anchor, double value) {
  rows.push_back({std::move(claim), std::move(anchor), value,
                  std::numeric_limits<double>::quiet_NaN(), RowStatus::kInfo});
}

bool Report::passed() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::kFail) return false;
  return true;
}

Json Report::to_json() const {
  Json out_rows = Json::array();
  for (const auto& r : rows)
    out_rows.push_back({{"claim", r.claim},
                        {"anchor", r.anchor},
                        {"value", real_to_json(r.value)},
                        {"tolerance", std::isnan(r.tolerance) ? Json(nullptr)
                                                              : real_to_json(r.tolerance)},
                        {"status", to_string(r.status)}});
  return Json{{"experiment", experiment},
              {"inputs", inputs},
              {"results", results},
              {"rows", std::move(out_rows)},
              {"passed", passed()}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_real(double x) {
  if (std::isnan(x)) return "";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "experiment,claim,anchor,value,tolerance,status\n";
  for (const auto& r : rows)
    out << csv_field(experiment) << ',' << csv_field(r.claim) << ',' << csv_field(r.anchor)
        << ',' << csv_real(r.value) << ',' << csv_real(r.tolerance) << ','
        << to_string(r.status) << '\n';
  return out.str();
}

std::string Report::serialize(const std::string& format) const {
  if (format == "json") return to_json().dump(2) + "\n";
  if (format == "csv") return to_csv();
  throw InvalidArgument("unknown report format '" + format + "' (expected json or csv)");
}

std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace isomlab
