#include "isomlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isomlab {

namespace {

constexpr const char* kTwoMaps = "two-map formulation of d_GH";
constexpr const char* kCorrespondence = "correspondence equivalent";
constexpr const char* kConical = "Proposition on conical sets";
constexpr const char* kHyersUlam = "Hyers–Ulam theorem";
constexpr const char* kDilworth = "Dilworth";
constexpr const char* kScalingLimit = "Šemrl–Väisälä scaling limit";
constexpr const char* kBanachMazur = "Banach–Mazur distance";
constexpr const char* kKadets = "Kadets distance definition";
constexpr const char* kBorsuk = "Borsuk–Ulam witness";
constexpr const char* kEmbedding = "finite embedding solver";
constexpr const char* kPetty = "Petty's equilateral bound";
constexpr const char* kProductNorm = "W_V product-norm construction";

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

Report start(const std::string& experiment, const ExperimentConfig& config) {
  Report report;
  report.experiment = experiment;
  report.inputs["config"] = config.echo();
  return report;
}

bool is_linf(const NormDescriptor& n) {
  const auto* lp = std::get_if<LpNorm>(&n.kind());
  return lp != nullptr && std::isinf(lp->p);
}

}  // namespace

Report run_gh(const FiniteMetricSpace& x0, const FiniteMetricSpace& y0, double scale,
              const ExperimentConfig& config) {
  Report report = start("gh", config);
  const auto x = x0.scaled(scale);
  const auto y = y0.scaled(scale);
  report.inputs["scale"] = scale;
  report.inputs["x_digest"] = digest(to_json(x0));
  report.inputs["y_digest"] = digest(to_json(y0));

  Json runs = Json::array();
  std::optional<double> maps, corr;
  try {
    const auto r = gh_exact_maps(x, y);
    maps = r.value;
    runs.push_back(to_json(r));
  } catch (const BudgetExceeded& e) {
    runs.push_back({{"method", "brute-force-maps"}, {"skipped", e.what()}});
  }
  try {
    const auto r = gh_exact_correspondences(x, y);
    corr = r.value;
    runs.push_back(to_json(r));
  } catch (const BudgetExceeded& e) {
    runs.push_back({{"method", "brute-force-correspondences"}, {"skipped", e.what()}});
  }
  BranchAndBoundOptions bnb;
  bnb.node_budget = config.budget_nodes;
  bnb.threads = config.threads;
  const auto b = gh_branch_and_bound(x, y, bnb);
  runs.push_back(to_json(b));
  report.results["gh"] = std::move(runs);
  report.results["lower_bound"] = real_to_json(gh_lower_bound(x, y));

  const double tol = config.tol("gh_agreement", 1e-12);
  if (maps && corr)
    report.check_at_most("maps == correspondences", kCorrespondence, std::abs(*maps - *corr), tol);
  const std::optional<double> exact = maps ? maps : corr;
  if (exact && b.exact) {
    report.check_at_most("branch-and-bound == exhaustive", kTwoMaps, std::abs(*exact - b.value),
                         tol);
  } else if (exact) {
    const double outside =
        std::max({0.0, b.lower_bound - *exact, *exact - b.upper_bound});
    report.check_at_most("exhaustive value inside branch-and-bound bracket", kTwoMaps, outside,
                         tol);
  }
  if (!b.exact) {
    report.info("branch-and-bound budget exhausted: lower bound", kTwoMaps, b.lower_bound);
    report.info("branch-and-bound budget exhausted: upper bound", kTwoMaps, b.upper_bound);
  }
  report.info("d_GH", kTwoMaps, exact.value_or(b.value));
  return report;
}

Report run_scaling(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                   const std::vector<double>& lambdas, const ExperimentConfig& config) {
  if (lambdas.empty()) throw InvalidArgument("scaling: at least one lambda is required");
  for (double l : lambdas)
    if (!(l > 0.0) || !std::isfinite(l))
      throw InvalidArgument("scaling: every lambda must be > 0 (got " + fmt(l) + ")");

  Report report = start("scaling", config);
  report.inputs["x_digest"] = digest(to_json(x));
  report.inputs["y_digest"] = digest(to_json(y));
  report.inputs["lambdas"] = lambdas;

  BranchAndBoundOptions bnb;
  bnb.node_budget = config.budget_nodes;
  bnb.threads = config.threads;
  const auto base = gh_branch_and_bound(x, y, bnb);
  Json table = Json::array();
  const double tol = config.tol("scaling", 1e-12);
  for (double l : lambdas) {
    const auto r = gh_branch_and_bound(x.scaled(l), y.scaled(l), bnb);
    table.push_back({{"lambda", l},
                     {"value", real_to_json(r.value)},
                     {"exact", r.exact},
                     {"ratio", base.value > 0 ? real_to_json(r.value / base.value) : Json(nullptr)}});
    report.check_at_most("d_GH(lambda X, lambda Y) = lambda d_GH(X, Y) at lambda=" + fmt(l),
                         kConical, std::abs(r.value - l * base.value), tol);
  }
  report.results["base"] = to_json(base);
  report.results["table"] = std::move(table);
  return report;
}

Report run_recover(const Json& spec, const RecoverParams& params, const ExperimentConfig& config) {
  Report report = start("recover", config);
  report.inputs["map"] = spec;
  MapFormula f = map_from_json(spec);

  std::optional<double> declared_eps;
  if (spec.value("map", "") == "f_phi" && spec.value("phi", "") == "sqrt_scaled") {
    const double claimed = spec.contains("params") ? spec.at("params").at(0).get<double>()
                                                   : spec.at("eps").get<double>();
    const auto validation =
        validate_f_phi(norm_from_json(spec.at("V")), norm_from_json(spec.at("plane")),
                       make_phi("sqrt_scaled", {claimed}), claimed, params.audit_pairs,
                       params.audit_radius, config.seed);
    report.results["phi_validation"] = {{"claimed_eps", claimed},
                                        {"measured", real_to_json(validation.measured)},
                                        {"rescale", real_to_json(validation.rescale)},
                                        {"pairs", params.audit_pairs},
                                        {"radius", params.audit_radius}};
    report.check_at_most("f_phi(sqrt_scaled) distortion <= eps on dense audit", kProductNorm,
                         validation.measured, claimed);
    f = validation.map;
    declared_eps = claimed;
  } else if (spec.value("map", "") == "noisy_linear") {
    declared_eps = 2.0 * spec.at("noise").get<double>();
  } else if (spec.value("map", "") == "linear" || spec.value("map", "") == "translation") {
    declared_eps = 0.0;
  }

  const auto scales = params.scales.empty() ? geometric_scales(0, 20) : params.scales;
  const auto probes = make_probes(f.domain, params.probes, params.radius, config.seed);
  const auto recovery = hyers_ulam_recover(f, scales, probes);
  report.results["recovery"] = to_json(recovery);
  report.info("linearity residual of U", kScalingLimit, recovery.linearity_residual);
  report.info("isometry residual of U", kScalingLimit, recovery.isometry_residual);
  report.info("divergent convergence table (1 = flagged)", kScalingLimit,
              recovery.divergent ? 1.0 : 0.0);

  const auto observed = bound_check(f, recovery.map, 0.0, 0.0, params.radius, params.probes,
                                    config.seed).eps_observed;
  const double eps = params.eps.value_or(declared_eps.value_or(observed));
  const double delta = params.delta.value_or(f.surjectivity_gap);
  const auto checks = bound_check(f, recovery.map, eps, delta, params.radius, params.probes,
                                  config.seed);
  report.results["bounds"] = to_json(checks);
  report.check("precondition: sampled distortion <= eps", kHyersUlam, checks.eps_observed, eps,
               !checks.vacuous);
  for (const auto& c : checks.checks) {
    const char* anchor = c.source == std::string("Dilworth")        ? kDilworth
                         : c.source == std::string("Semrl-Vaisala") ? kScalingLimit
                                                                    : kHyersUlam;
    const std::string claim = "sup ||f(v) - U v|| <= M = " + c.name + " (" + c.source + ")";
    if (f.surjective)
      report.check(claim, anchor, c.max_residual, c.bound, c.satisfied);
    else
      report.expect_violation(claim, anchor, c.max_residual, c.bound, !c.satisfied);
  }
  return report;
}

Report run_bm(const NormDescriptor& v, const NormDescriptor& w, int restarts, double net_eps,
              const ExperimentConfig& config) {
  Report report = start("bm", config);
  report.inputs["V"] = to_json(v);
  report.inputs["W"] = to_json(w);
  report.inputs["restarts"] = restarts;
  BanachMazurOptions options;
  options.restarts = restarts;
  options.seed = config.seed;
  options.net_eps = net_eps;
  options.threads = config.threads;
  const auto est = banach_mazur_estimate(v, w, options);
  report.results["banach_mazur"] = to_json(est);
  report.results["error_bars"] = to_json(est)["error_bars"];
  report.info("d_BM upper estimate", kBanachMazur, est.value);
  report.info("d_BM upper end of net error bar", kBanachMazur, est.upper);
  return report;
}

Report run_embed(const FiniteMetricSpace& s, const NormDescriptor& w, int restarts,
                 const ExperimentConfig& config) {
  Report report = start("embed", config);
  report.inputs["space_digest"] = digest(to_json(s));
  report.inputs["W"] = to_json(w);
  report.inputs["restarts"] = restarts;

  const auto frechet = frechet_embed(s);
  report.check_at_most("Frechet placement residual in l_inf^n", kEmbedding, frechet.residual,
                       config.tol("frechet", 1e-12));

  EmbeddingOptions options;
  options.restarts = restarts;
  options.seed = config.seed;
  options.threads = config.threads;
  options.embeddable_threshold = config.tol("embeddable", 1e-6);
  options.isometry_threshold = config.tol("embedding", 1e-9);
  const auto found = embed_finite(s, w, options);
  report.results["embedding"] = to_json(found);
  if (is_linf(w) && w.dim() >= s.size()) {
    report.check_at_most("embedding residual (l_inf^n, exact by Frechet start)", kEmbedding,
                         found.residual, options.isometry_threshold);
  } else if (found.embeddable()) {
    report.check_at_most("embeddable (numerical)", kEmbedding, found.residual,
                         options.embeddable_threshold);
  } else {
    report.info("no embedding found (residual floor)", kEmbedding, found.residual);
  }
  return report;
}

Report run_simplex(const NormDescriptor& w, int m, double side, int restarts,
                   const ExperimentConfig& config) {
  Report report = start("simplex", config);
  report.inputs["W"] = to_json(w);
  report.inputs["m"] = m;
  report.inputs["side"] = side;
  EmbeddingOptions options;
  options.restarts = restarts;
  options.seed = config.seed;
  options.threads = config.threads;
  const auto set = equilateral_search(w, m, side, options);
  report.results["simplex"] = to_json(set);
  const bool within_petty = w.dim() < 31 && m <= (1 << w.dim());
  if (is_linf(w) && within_petty) {
    report.check_at_most("cube-vertex simplex residual", kPetty, set.residual,
                         config.tol("embedding", 1e-9));
  } else if (!within_petty) {
    report.info("search floor above the 2^n bound (not a proof)", kPetty, set.residual);
  } else {
    report.info("equilateral search residual", kPetty, set.residual);
  }
  return report;
}

Report run_borsuk(const Json& spec, const std::vector<double>& radii, double net_eps,
                  const ExperimentConfig& config) {
  Report report = start("borsuk", config);
  report.inputs["map"] = spec;
  const auto f = map_from_json(spec);
  const auto net = sphere_net(f.domain, net_eps, config.seed);
  report.results["net"] = to_json(net);
  Json rows = Json::array();
  for (double r : radii) {
    const auto w = borsuk_witness(f, r, net);
    rows.push_back({{"radius", r}, {"witness", to_json(w)}});
    report.check_at_most("antipodal gap at R=" + fmt(r), kBorsuk, w.gap,
                         config.tol("borsuk_gap", 1e-9));
    report.info("dis f >= 2R - gap at R=" + fmt(r), kBorsuk, w.distortion_lb);
  }
  report.results["witnesses"] = std::move(rows);
  return report;
}

Report run_kadets(const NormDescriptor& v, const NormDescriptor& w, int sample,
                  const ExperimentConfig& config) {
  Report report = start("kadets", config);
  report.inputs["V"] = to_json(v);
  report.inputs["W"] = to_json(w);
  report.inputs["sample"] = sample;
  BranchAndBoundOptions bnb;
  bnb.node_budget = config.budget_nodes;
  bnb.threads = config.threads;
  BanachMazurOptions bm;
  bm.threads = config.threads;
  const auto k = kadets_gh_relation_report(v, w, sample, config.seed, bnb, bm);
  report.results["kadets"] = to_json(k);
  report.check_at_most("sampled GH bracket is ordered (lower - upper)", kKadets,
                       std::max(0.0, k.gh_lower - k.gh_upper), config.tol("gh_agreement", 1e-12));
  report.info("d_GH lower bound between sampled balls", kKadets, k.gh_lower);
  report.info("d_BM context", kBanachMazur, k.banach_mazur.value);
  return report;
}

}  // namespace isomlab
