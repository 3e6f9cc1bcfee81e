#include "isomlab/experiments.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace isomlab;

namespace {

FiniteMetricSpace space(std::initializer_list<double> upper, int n) {
  Matrix d = Matrix::Zero(n, n);
  auto it = upper.begin();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = *it++;
  return validate_metric(d);
}

bool anchors_known(const Report& r) {
  const auto& known = known_anchors();
  return std::all_of(r.rows.begin(), r.rows.end(), [&](const ReportRow& row) {
    return std::find(known.begin(), known.end(), row.anchor) != known.end();
  });
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("row statuses and overall verdict") {
  Report r;
  r.check_at_most("a", "distortion", 0.5, 1.0);
  CHECK(r.passed());
  r.expect_violation("b", "Hyers–Ulam theorem", 2.0, 1.0, true);
  CHECK(r.rows.back().status == RowStatus::kExpectedFail);
  CHECK(r.passed());
  r.info("c", "distortion", 3.0);
  CHECK(r.passed());
  r.check_at_most("d", "distortion", 2.0, 1.0);
  CHECK(r.rows.back().status == RowStatus::kFail);
  CHECK_FALSE(r.passed());
  CHECK(r.to_json()["passed"] == false);
}

TEST_CASE("csv has the fixed column order") {
  Report r;
  r.experiment = "gh";
  r.check_at_most("x, y", "distortion", 0.25, 1.0);
  std::istringstream in(r.to_csv());
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  CHECK(header == "experiment,claim,anchor,value,tolerance,status");
  CHECK(line == "gh,\"x, y\",distortion,0.25,1,pass");
}

TEST_CASE("tolerance parsing") {
  CHECK(parse_tolerance("gh_agreement=1e-9") == std::pair<std::string, double>{"gh_agreement", 1e-9});
  for (const char* bad : {"gh_agreement", "=1", "x=0", "x=-1", "x=abc"})
    CHECK_THROWS_AS(parse_tolerance(bad), InvalidArgument);
  ExperimentConfig c;
  c.tolerances["scaling"] = 1e-6;
  CHECK(c.tol("scaling", 1.0) == 1e-6);
  CHECK(c.tol("missing", 0.5) == 0.5);
}

TEST_CASE("config echo carries the seed but not the thread count") {
  ExperimentConfig a, b;
  a.seed = b.seed = 42;
  b.threads = 4;
  CHECK(a.echo()["seed"] == 42);
  CHECK(a.echo() == b.echo());
}

TEST_CASE("digest is stable and content sensitive") {
  const Json a = {{"x", 1}};
  CHECK(digest(a) == digest(Json{{"x", 1}}));
  CHECK(digest(a) != digest(Json{{"x", 2}}));
  CHECK(digest(a).size() == 16);
}

TEST_CASE("gh report on the CLI examples") {
  ExperimentConfig c;
  const auto a = space({1, 2, 1}, 3);
  CHECK(run_gh(a, a, 1.0, c).rows.back().value == 0.0);
  const auto pt = validate_metric(Matrix::Zero(1, 1));
  const auto r = run_gh(pt, space({2}, 2), 1.0, c);
  CHECK(r.passed());
  CHECK(r.rows.back().value == 1.0);
  const auto b = space({3, 4, 5}, 3);
  CHECK(run_gh(a, b, 3.0, c).rows.back().value == 3 * run_gh(a, b, 1.0, c).rows.back().value);
  CHECK(anchors_known(r));
}

TEST_CASE("scaling demo") {
  ExperimentConfig c;
  const auto x = space({1}, 2), y = space({3}, 2);
  const auto r = run_scaling(x, y, {1, 2, 4}, c);
  CHECK(r.passed());
  const auto& table = r.results["table"];
  CHECK(table[0]["ratio"] == 1.0);
  CHECK(table[1]["ratio"] == 2.0);
  CHECK(table[2]["ratio"] == 4.0);
  CHECK_THROWS_AS(run_scaling(x, y, {1, 0}, c), InvalidArgument);
  for (const auto& row : run_scaling(x, x, {1, 2}, c).results["table"]) CHECK(row["value"] == 0.0);
}

TEST_CASE("recover: exact isometry, noisy isometry, counterexample") {
  ExperimentConfig c;
  RecoverParams p;
  const Json rot = {{"map", "linear"}, {"matrix", {{0, -1}, {1, 0}}}, {"V", "l2:2"}, {"W", "l2:2"}};
  const auto exact = run_recover(rot, p, c);
  CHECK(exact.passed());
  for (const auto& row : exact.rows)
    if (row.status == RowStatus::kPass) CHECK(row.value <= 1e-12);

  const Json noisy = {{"map", "noisy_linear"}, {"matrix", {{0.6, -0.8}, {0.8, 0.6}}},
                      {"V", "l2:2"}, {"W", "l2:2"}, {"noise", 0.05}, {"seed", 3}};
  CHECK(run_recover(noisy, p, c).passed());

  const Json sq = {{"map", "f_phi"}, {"phi", "sqrt_scaled"}, {"params", {0.01}},
                   {"V", "l2:1"}, {"plane", "l2:2"}};
  p.radius = 4.0;
  const auto bad = run_recover(sq, p, c);
  CHECK(bad.passed());
  const auto it = std::find_if(bad.rows.begin(), bad.rows.end(), [](const ReportRow& r) {
    return r.claim.find("10eps") != std::string::npos;
  });
  REQUIRE(it != bad.rows.end());
  CHECK(it->status == RowStatus::kExpectedFail);
  CHECK(anchors_known(bad));
}

TEST_CASE("bm, embed, simplex and borsuk drivers") {
  ExperimentConfig c;
  const auto bm = run_bm(NormDescriptor::l1(2), NormDescriptor::linf(2), 4, 0.0, c);
  CHECK(bm.rows.front().value <= 1e-3);
  CHECK(bm.results.contains("error_bars"));
  CHECK(run_simplex(NormDescriptor::linf(3), 8, 1.0, 4, c).rows.front().value == 0.0);
  const auto tri = space({1, 1, 1}, 3);
  const auto emb = run_embed(tri, NormDescriptor::l2(2), 4, c);
  CHECK(emb.passed());
  CHECK(emb.results["embedding"]["residual"].get<double>() <= 1e-9);
  const Json proj = {{"map", "linear"}, {"matrix", {{1, 0}}}, {"V", "l2:2"}, {"W", "l2:1"}};
  const auto b = run_borsuk(proj, {1, 10}, 0.05, c);
  CHECK(b.passed());
  CHECK(anchors_known(b));
  CHECK(anchors_known(emb));
  CHECK(anchors_known(bm));
}

}
