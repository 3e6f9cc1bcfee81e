#pragma once

#include "isomlab/json_io.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace isomlab {

enum class RowStatus { kPass, kFail, kExpectedFail, kInfo };

std::string to_string(RowStatus status);

/// One numeric claim of an experiment.
struct ReportRow {
  std::string claim;
  /// Named result the claim comes from; one of known_anchors().
  std::string anchor;
  double value = 0.0;
  /// Threshold the value was compared against (NaN for info rows).
  double tolerance = 0.0;
  RowStatus status = RowStatus::kInfo;
};

/// Every anchor string a report row may carry.
const std::vector<std::string>& known_anchors();

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::int64_t budget_nodes = 2'000'000;
  std::map<std::string, double> tolerances;
  std::string output_path;
  std::string format = "json";
  /// Worker count; not echoed into reports.
  int threads = 1;

  /// Named tolerance with a default; tolerances must be positive.
  double tol(const std::string& name, double fallback) const;
  Json echo() const;
};

/// Default tolerances, by name.
const std::map<std::string, double>& default_tolerances();

/// Parses "name=value"; throws InvalidArgument unless value > 0.
std::pair<std::string, double> parse_tolerance(const std::string& text);

struct Report {
  std::string experiment;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<ReportRow> rows;

  /// Adds a row whose status follows from value <= tolerance.
  void check_at_most(std::string claim, std::string anchor, double value, double tolerance);
  /// Status decided by the caller (comparisons that carry their own slack).
  void check(std::string claim, std::string anchor, double value, double tolerance, bool ok);
  /// Same, but a violation is recorded as expected-fail.
  void expect_violation(std::string claim, std::string anchor, double value, double tolerance,
                        bool violated);
  void info(std::string claim, std::string anchor, double value);

  /// No row failed; expected-fail and info rows do not count against it.
  bool passed() const;

  Json to_json() const;
  /// Columns: experiment, claim, anchor, value, tolerance, status.
  std::string to_csv() const;
  std::string serialize(const std::string& format) const;
};

/// FNV-1a of the canonical JSON dump, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace isomlab
