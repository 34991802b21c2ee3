// Command-line front end: analyze | verify | bounds | weights | plot.
// Exit codes: 0 success, 1 input/usage error, 2 identity-check failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moran/csv.hpp"
#include "moran/random_instance.hpp"
#include "moran/report.hpp"

namespace {

using moran::AnalysisConfig;
using moran::AnalysisResult;
using moran::IdentityCheck;

struct CommonOpts {
  std::string values;
  std::string distances;
  std::string column;
  bool log_transform = false;
  std::string routes = "closed_form,normal_equations,cramer,generic_ls";
  std::string out = ".";
  std::string emit = "json,csv,svg";
  bool no_getis = false;
};

std::vector<std::string> split_list(const std::string& csv_list) {
  return moran::csv::split(csv_list, ',');
}

AnalysisConfig make_config(const CommonOpts& opts) {
  AnalysisConfig cfg;
  cfg.attribute_path = opts.values;
  cfg.distance_path = opts.distances;
  cfg.column = opts.column;
  cfg.log_transform = opts.log_transform;
  cfg.output_dir = opts.out;
  cfg.getis = !opts.no_getis;

  cfg.routes.clear();
  for (const std::string& name : split_list(opts.routes)) {
    if (!name.empty()) cfg.routes.push_back(moran::route_from_string(name));
  }
  if (cfg.routes.empty()) {
    throw moran::DomainError("--routes: at least one estimation route is required");
  }

  cfg.emit_json = cfg.emit_csv = cfg.emit_svg = false;
  for (const std::string& kind : split_list(opts.emit)) {
    if (kind == "json") cfg.emit_json = true;
    else if (kind == "csv") cfg.emit_csv = true;
    else if (kind == "svg") cfg.emit_svg = true;
    else if (!kind.empty()) {
      throw moran::DomainError("--emit: unknown kind '" + kind +
                               "' (expected json, csv or svg)");
    }
  }
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts* opts, bool inputs_required) {
  cmd->add_option("--values", opts->values, "attribute CSV (id column first)")
      ->required(inputs_required);
  cmd->add_option("--distances", opts->distances, "distance matrix CSV")
      ->required(inputs_required);
  cmd->add_option("--column", opts->column, "attribute column to analyze")
      ->required(inputs_required);
  cmd->add_flag("--log", opts->log_transform, "natural log before z-scoring");
  cmd->add_option("--routes", opts->routes,
                  "comma list: closed_form,normal_equations,cramer,generic_ls");
  cmd->add_option("--out", opts->out, "output directory (default .)");
  cmd->add_option("--emit", opts->emit, "comma subset of json,csv,svg");
  cmd->add_flag("--no-getis", opts->no_getis, "skip the Getis-Ord statistic");
}

std::string fmt(double value) { return moran::csv::format_sig12(value); }

void print_checks(const std::vector<IdentityCheck>& checks) {
  for (const IdentityCheck& c : checks) {
    std::printf("%-14s residual=%-22s %s\n", c.name.c_str(), fmt(c.residual).c_str(),
                c.pass ? "PASS" : "FAIL");
  }
}

int cmd_analyze(const CommonOpts& opts) {
  const AnalysisConfig cfg = make_config(opts);
  const AnalysisResult res = moran::run_analysis(cfg);
  const std::vector<std::string> written = moran::write_outputs(res, cfg);

  std::cout << "n = " << res.moran.n << "\n"
            << "I = " << fmt(res.moran.index) << "\n"
            << "a = " << fmt(res.canonical.intercept)
            << "  b = " << fmt(res.canonical.slope) << "\n"
            << "sigma_e2 = " << fmt(res.canonical.sigma_e2)
            << "  r2 = " << fmt(res.canonical.r_squared) << "\n";
  int passed = 0;
  for (const IdentityCheck& c : res.checks) passed += c.pass ? 1 : 0;
  std::cout << "identity checks: " << passed << "/" << res.checks.size()
            << (res.all_checks_pass ? " PASS" : " FAIL") << "\n";
  for (const std::string& path : written) std::cout << "wrote " << path << "\n";
  return res.all_checks_pass ? 0 : 2;
}

int verify_result(const AnalysisResult& res) {
  std::vector<IdentityCheck> all = res.checks;
  const std::vector<IdentityCheck> bc = moran::bounds_checks(res.bounds);
  all.insert(all.end(), bc.begin(), bc.end());
  print_checks(all);
  bool ok = true;
  for (const IdentityCheck& c : all) ok = ok && c.pass;
  std::cout << (ok ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  return ok ? 0 : 2;
}

int cmd_verify(const CommonOpts& opts, int random_n, std::uint64_t seed) {
  if (random_n > 0) {
    const moran::RandomInstance inst = moran::random_instance(random_n, seed);
    AnalysisConfig cfg;
    cfg.attribute_path = "<random>";
    cfg.distance_path = "<random>";
    cfg.column = "x";
    cfg.emit_json = cfg.emit_csv = cfg.emit_svg = false;
    cfg.getis = !opts.no_getis;
    std::cout << "random instance: n = " << random_n << ", seed = " << seed << "\n";
    return verify_result(moran::run_analysis_core(inst.table, inst.dist, cfg));
  }
  if (opts.values.empty() || opts.distances.empty() || opts.column.empty()) {
    throw moran::DomainError(
        "verify: either --random N or --values/--distances/--column are required");
  }
  AnalysisConfig cfg = make_config(opts);
  cfg.emit_json = cfg.emit_csv = cfg.emit_svg = false;
  return verify_result(moran::run_analysis(cfg));
}

int cmd_bounds(const CommonOpts& opts) {
  AnalysisConfig cfg = make_config(opts);
  cfg.emit_json = cfg.emit_csv = cfg.emit_svg = false;
  const AnalysisResult res = moran::run_analysis(cfg);
  const moran::BoundsReport& b = res.bounds;
  const double slack = moran::tol().bounds_slack;

  std::cout << "set1 spectrum of nW:        [" << fmt(b.set1[0]) << ", " << fmt(b.set1[1])
            << "]  I = " << fmt(b.index) << (b.set1_satisfied ? "" : "  VIOLATED");
  if (b.attain_lower <= slack) std::cout << "  (attains lower bound)";
  if (b.attain_upper <= slack) std::cout << "  (attains upper bound)";
  std::cout << "\n";

  std::cout << "set2 spectrum of (nW)'(nW): [" << fmt(b.set2[0]) << ", " << fmt(b.set2[1])
            << "]  I^2 + ((Wz)'o)^2 + sigma_e2 = " << fmt(b.set2_quantity)
            << (b.set2_satisfied ? "" : "  VIOLATED") << "\n";

  std::cout << "set3 rank-one bound:        [" << fmt(b.set3[0]) << ", " << fmt(b.set3[1])
            << "]  I^2 = " << fmt(b.set3_quantity)
            << (b.set3_satisfied ? "" : "  VIOLATED");
  if (b.set3[1] - b.set3_quantity <= slack) std::cout << "  (attains upper bound)";
  std::cout << "\n";

  std::cout << "intersection interval for I: [" << fmt(b.intersection_for_I[0]) << ", "
            << fmt(b.intersection_for_I[1]) << "]\n";
  return (b.set1_satisfied && b.set2_satisfied && b.set3_satisfied) ? 0 : 2;
}

int cmd_weights(const std::string& distances, const std::string& out) {
  const moran::DistanceMatrix dist = moran::load_distance_matrix(distances);
  const moran::WeightMatrix w =
      moran::normalize_global(moran::inverse_distance_contiguity(dist));
  std::filesystem::create_directories(out);
  const std::string path = out + "/weights.csv";
  moran::write_weight_matrix(w, dist.ids, path);
  std::cout << "n = " << w.n << ", sum = " << fmt(w.w.sum()) << "\n"
            << "wrote " << path << "\n";
  return 0;
}

int cmd_plot(const CommonOpts& opts) {
  AnalysisConfig cfg = make_config(opts);
  cfg.emit_json = false;
  if (!cfg.emit_csv && !cfg.emit_svg) cfg.emit_csv = cfg.emit_svg = true;
  const AnalysisResult res = moran::run_analysis(cfg);
  for (const std::string& path : moran::write_outputs(res, cfg)) {
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moran's-index spatial autocorrelation analysis"};
  app.require_subcommand(1);

  CommonOpts analyze_opts, verify_opts, bounds_opts, plot_opts;
  std::string weights_distances, weights_out = ".";
  int random_n = 0;
  std::uint64_t seed = 42;

  CLI::App* analyze = app.add_subcommand("analyze", "full pipeline + report files");
  add_common(analyze, &analyze_opts, true);

  CLI::App* verify = app.add_subcommand("verify", "print identity checks PASS/FAIL");
  add_common(verify, &verify_opts, false);
  verify->add_option("--random", random_n, "verify a synthetic n-unit instance");
  verify->add_option("--seed", seed, "seed for --random (default 42)");

  CLI::App* bounds = app.add_subcommand("bounds", "print the three bound sets");
  add_common(bounds, &bounds_opts, true);

  CLI::App* weights = app.add_subcommand("weights", "dump the normalized weight matrix");
  weights->add_option("--distances", weights_distances, "distance matrix CSV")->required();
  weights->add_option("--out", weights_out, "output directory (default .)");

  CLI::App* plot = app.add_subcommand("plot", "scatterplot CSV/SVG only");
  add_common(plot, &plot_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_opts);
    if (verify->parsed()) return cmd_verify(verify_opts, random_n, seed);
    if (bounds->parsed()) return cmd_bounds(bounds_opts);
    if (weights->parsed()) return cmd_weights(weights_distances, weights_out);
    if (plot->parsed()) return cmd_plot(plot_opts);
  } catch (const moran::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
