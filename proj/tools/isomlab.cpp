// isomlab command-line driver. Each subcommand runs one experiment and
// writes its report to stdout or --out.
//
// Exit codes: 0 success (expected-fail rows allowed), 2 usage or malformed
// input, 3 numeric failure or a failed row.

#include "isomlab/experiments.hpp"
#include "isomlab/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace isomlab;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::int64_t budget_nodes = 2'000'000;
  std::vector<std::string> tols;
  std::string out;
  std::string format = "json";

  ExperimentConfig config() const {
    ExperimentConfig c;
    c.seed = seed;
    c.budget_nodes = budget_nodes;
    for (const auto& t : tols) c.tolerances.insert_or_assign(parse_tolerance(t).first,
                                                              parse_tolerance(t).second);
    c.output_path = out;
    c.format = format;
    c.threads = default_thread_count();
    return c;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "RNG seed");
  cmd->add_option("--budget-nodes", common.budget_nodes, "branch-and-bound node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", common.tols, "tolerance override, name=value")->take_all();
  cmd->add_option("--out", common.out, "write the report here instead of stdout");
  cmd->add_option("--format", common.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

FiniteMetricSpace load_space(const std::string& path) {
  return metric_space_from_json(read_json_file(path));
}

int emit(const Report& report, const ExperimentConfig& config) {
  const std::string text = report.serialize(config.format);
  if (config.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output_path);
    if (!out) throw InvalidArgument("cannot write " + config.output_path);
    out << text;
  }
  return report.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isomlab: Gromov-Hausdorff and approximate isometry experiments"};
  app.require_subcommand(1);
  Common common;
  std::function<Report(const ExperimentConfig&)> run;

  std::string x_path, y_path, s_path, v_arg, w_arg, map_path;
  double scale = 1.0, side = 1.0, net_eps = 0.0, radius = 10.0;
  std::vector<double> lambdas{1.0, 2.0, 4.0}, radii{1.0, 10.0, 100.0};
  std::optional<double> eps, delta;
  int restarts = 8, m = 0, probes = 512, sample = 16;

  auto* gh = app.add_subcommand("gh", "d_GH by three exact methods, cross-checked");
  gh->add_option("--x", x_path, "metric space JSON")->required()->check(CLI::ExistingFile);
  gh->add_option("--y", y_path, "metric space JSON (default: --x)")->check(CLI::ExistingFile);
  gh->add_option("--scale", scale, "multiply both spaces by this factor")
      ->check(CLI::PositiveNumber);
  add_common(gh, common);
  gh->callback([&] {
    run = [&](const ExperimentConfig& c) {
      const auto x = load_space(x_path);
      return run_gh(x, y_path.empty() ? x : load_space(y_path), scale, c);
    };
  });

  auto* scaling = app.add_subcommand("scaling", "d_GH(lambda X, lambda Y) against lambda");
  scaling->add_option("--x", x_path)->required()->check(CLI::ExistingFile);
  scaling->add_option("--y", y_path)->check(CLI::ExistingFile);
  scaling->add_option("--lambda", lambdas, "scale factors")->take_all();
  add_common(scaling, common);
  scaling->callback([&] {
    run = [&](const ExperimentConfig& c) {
      const auto x = load_space(x_path);
      return run_scaling(x, y_path.empty() ? x : load_space(y_path), lambdas, c);
    };
  });

  auto* recover = app.add_subcommand("recover", "recover the isometry near an eps-isometry");
  recover->add_option("--map", map_path, "map formula JSON")->required()->check(CLI::ExistingFile);
  recover->add_option("--eps", eps, "distortion bound to test");
  recover->add_option("--delta", delta, "surjectivity gap to assume");
  recover->add_option("--radius", radius, "probe radius")->check(CLI::PositiveNumber);
  recover->add_option("--probes", probes)->check(CLI::PositiveNumber);
  add_common(recover, common);
  recover->callback([&] {
    run = [&](const ExperimentConfig& c) {
      RecoverParams p;
      p.eps = eps;
      p.delta = delta;
      p.radius = radius;
      p.probes = probes;
      return run_recover(read_json_file(map_path), p, c);
    };
  });

  auto* bm = app.add_subcommand("bm", "Banach-Mazur distance estimate");
  bm->add_option("--v", v_arg, "norm shorthand or polytope file")->required();
  bm->add_option("--w", w_arg, "norm shorthand or polytope file")->required();
  bm->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  bm->add_option("--net-eps", net_eps, "sphere net radius (0 = automatic)");
  add_common(bm, common);
  bm->callback([&] {
    run = [&](const ExperimentConfig& c) {
      return run_bm(norm_from_argument(v_arg), norm_from_argument(w_arg), restarts, net_eps, c);
    };
  });

  auto* embed = app.add_subcommand("embed", "isometric embedding of a finite space");
  embed->add_option("--s", s_path, "metric space JSON")->required()->check(CLI::ExistingFile);
  embed->add_option("--w", w_arg)->required();
  embed->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  add_common(embed, common);
  embed->callback([&] {
    run = [&](const ExperimentConfig& c) {
      return run_embed(load_space(s_path), norm_from_argument(w_arg), restarts, c);
    };
  });

  auto* simplex = app.add_subcommand("simplex", "equilateral set search");
  simplex->add_option("--w", w_arg)->required();
  simplex->add_option("--m", m, "number of points")->required()->check(CLI::Range(2, 1 << 20));
  simplex->add_option("--side", side)->check(CLI::PositiveNumber);
  simplex->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  add_common(simplex, common);
  simplex->callback([&] {
    run = [&](const ExperimentConfig& c) {
      return run_simplex(norm_from_argument(w_arg), m, side, restarts, c);
    };
  });

  auto* borsuk = app.add_subcommand("borsuk", "antipodal witnesses for a map");
  borsuk->add_option("--map", map_path)->required()->check(CLI::ExistingFile);
  borsuk->add_option("--radius", radii)->take_all();
  double borsuk_net_eps = 0.05;
  borsuk->add_option("--net-eps", borsuk_net_eps, "sphere net radius");
  add_common(borsuk, common);
  borsuk->callback([&] {
    run = [&](const ExperimentConfig& c) {
      return run_borsuk(read_json_file(map_path), radii, borsuk_net_eps, c);
    };
  });

  auto* kadets = app.add_subcommand("kadets", "sampled GH bounds between unit balls");
  kadets->add_option("--v", v_arg)->required();
  kadets->add_option("--w", w_arg)->required();
  kadets->add_option("--sample", sample)->check(CLI::Range(2, 64));
  add_common(kadets, common);
  kadets->callback([&] {
    run = [&](const ExperimentConfig& c) {
      return run_kadets(norm_from_argument(v_arg), norm_from_argument(w_arg), sample, c);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto config = common.config();
    return emit(run(config), config);
  } catch (const InvalidArgument& e) {
    std::cerr << "isomlab: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "isomlab: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "isomlab: " << e.what() << "\n";
    return 3;
  }
}
