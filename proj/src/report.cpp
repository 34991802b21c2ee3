#include "moran/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "json.hpp"
#include "moran/csv.hpp"

namespace moran {

namespace {

using nlohmann::json;

// Doubles are rounded to 12 significant digits before serialization so the
// report bytes do not depend on printing quirks; NaN becomes null.
json num(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(csv::format_sig12(value).c_str(), nullptr);
}

json interval(const std::array<double, 2>& range) {
  return json::array({num(range[0]), num(range[1])});
}

json fit_entry(const ModelFit& fit, const PValues& p, const Diagnostics& d,
               Eigen::Index n) {
  json entry;
  entry["n"] = static_cast<int>(n);
  entry["model"] = fit.with_intercept ? "with_intercept" : "zero_intercept";
  entry["route"] = route_name(fit.route);
  entry["a"] = num(fit.intercept);
  entry["b_moran"] = num(fit.slope);
  entry["gamma"] = num(fit.gamma);
  entry["sigma_e2"] = num(fit.sigma_e2);
  entry["r2"] = num(fit.r_squared);
  entry["p_intercept"] = num(p.p_intercept);
  entry["p_slope"] = num(p.p_slope);
  entry["identity_residuals"] = {{"eq9_z", num(d.eq9_z)},
                                 {"eq9_o", num(d.eq9_o)},
                                 {"eq23", num(d.eq23)},
                                 {"eq24", num(d.eq24)}};
  return entry;
}

IdentityCheck make_check(std::string name, double residual) {
  IdentityCheck c;
  c.name = std::move(name);
  c.residual = residual;
  c.pass = residual <= tol().identity_pass;
  return c;
}

}  // namespace

AnalysisResult run_analysis_core(const AttributeTable& table, const DistanceMatrix& dist,
                                 const AnalysisConfig& cfg) {
  if (table.ids != dist.ids) {
    throw LoadError("attribute table and distance matrix disagree on unit ids "
                    "(same ids in the same order are required)");
  }

  AnalysisResult res;
  res.ids = table.ids;
  res.raw = table.column(cfg.column);
  res.z = standardize(res.raw, cfg.log_transform, cfg.column);
  res.w = normalize_global(inverse_distance_contiguity(dist));
  res.moran = moran_index(res.w, res.z);

  res.canonical = fit_with_intercept(res.w, res.z, Route::closed_form);
  res.comparison = fit_all_routes(res.w, res.z, cfg.routes);
  res.fits_with = res.comparison.fits;
  res.fit_without = fit_without_intercept(res.w, res.z);

  const Vector response = static_cast<double>(res.w.n) * res.moran.lag;
  for (const ModelFit& fit : res.fits_with) {
    res.pvalues_with.push_back(coefficient_p_values(fit, response));
  }
  res.pvalues_without = coefficient_p_values(res.fit_without, response);

  res.bounds = compute_bounds(res.w, res.z, res.canonical);
  res.outer = outer_product_check(res.w, res.z);

  bool raw_positive = true;
  for (Eigen::Index i = 0; i < res.raw.size(); ++i) {
    if (!(res.raw(i) > 0.0)) raw_positive = false;
  }
  if (cfg.getis && raw_positive) {
    res.getis = getis_ord_index(res.w, res.raw);
  }

  res.scatter = build_scatterplot(res.w, res.z, res.canonical, res.fit_without, res.ids);

  const double n = static_cast<double>(res.w.n);
  const Diagnostics diag = residual_diagnostics(res.canonical, res.w, res.z);
  res.checks.push_back(make_check(
      "eq2", std::max(std::abs(res.z.z.squaredNorm() - n), std::abs(res.z.z.sum()))));
  res.checks.push_back(make_check("eq9", std::max(diag.eq9_z, diag.eq9_o)));
  res.checks.push_back(make_check(
      "eq13_18", std::abs(res.canonical.slope - res.fit_without.slope)));
  res.checks.push_back(make_check("eq16", diag.eq16));
  res.checks.push_back(make_check("eq23", diag.eq23));
  res.checks.push_back(make_check("eq24", diag.eq24));
  res.checks.push_back(make_check("b2", diag.b2));
  double outer_res = std::max(res.outer.residual, res.outer.trace_residual);
  if (res.outer.eigen_checked) {
    outer_res = std::max({outer_res, res.outer.eigen_offset, res.outer.eigen_spurious});
  }
  res.checks.push_back(make_check("outer_product", outer_res));
  if (res.getis) {
    res.checks.push_back(make_check("table4_getis", res.getis->identity_residual));
  }

  res.all_checks_pass = std::all_of(res.checks.begin(), res.checks.end(),
                                    [](const IdentityCheck& c) { return c.pass; });
  return res;
}

AnalysisResult run_analysis(const AnalysisConfig& cfg) {
  const AttributeTable table = load_attribute_table(cfg.attribute_path);
  const DistanceMatrix dist = load_distance_matrix(cfg.distance_path);
  return run_analysis_core(table, dist, cfg);
}

std::vector<IdentityCheck> bounds_checks(const BoundsReport& b) {
  auto escape = [](double q, double lo, double hi) {
    return std::max({0.0, lo - q, q - hi});
  };
  std::vector<IdentityCheck> checks;
  auto add = [&](const std::string& name, double residual) {
    IdentityCheck c;
    c.name = name;
    c.residual = residual;
    c.pass = residual <= tol().bounds_slack;
    checks.push_back(c);
  };
  add("eq30_set1", escape(b.index, b.set1[0], b.set1[1]));
  add("eq33_set2", escape(b.set2_quantity, b.set2[0], b.set2[1]));
  add("eq36_set3", escape(b.set3_quantity, b.set3[0], b.set3[1]));
  return checks;
}

std::string report_json(const AnalysisResult& res, const AnalysisConfig& cfg) {
  json root;
  root["schema"] = 1;

  json config;
  config["attribute_path"] = cfg.attribute_path;
  config["distance_path"] = cfg.distance_path;
  config["column"] = cfg.column;
  config["log_transform"] = cfg.log_transform;
  config["output_dir"] = cfg.output_dir;
  json emit = json::array();
  if (cfg.emit_json) emit.push_back("json");
  if (cfg.emit_csv) emit.push_back("csv");
  if (cfg.emit_svg) emit.push_back("svg");
  config["emit"] = emit;
  json routes = json::array();
  for (Route r : cfg.routes) routes.push_back(route_name(r));
  config["routes"] = routes;
  config["getis"] = cfg.getis;
  config["svg_width"] = cfg.svg_width;
  config["svg_height"] = cfg.svg_height;
  root["config"] = config;

  const Tolerances& t = tol();
  root["tolerances"] = {{"weight_sum", num(t.weight_sum)},
                        {"standardize_per_n", num(t.standardize_per_n)},
                        {"recompute", num(t.recompute)},
                        {"identity_pass", num(t.identity_pass)},
                        {"route_agreement", num(t.route_agreement)},
                        {"slope_equality", num(t.slope_equality)},
                        {"bounds_slack", num(t.bounds_slack)},
                        {"spectral_crosscheck", num(t.spectral_crosscheck)},
                        {"getis_identity", num(t.getis_identity)},
                        {"symmetry_abs", num(t.symmetry_abs)},
                        {"jacobi_offdiag", num(t.jacobi_offdiag)},
                        {"jacobi_max_sweeps", t.jacobi_max_sweeps}};

  root["n"] = static_cast<int>(res.moran.n);
  root["moran"] = {{"index", num(res.moran.index)},
                   {"n", static_cast<int>(res.moran.n)},
                   {"lag_sum", num(res.moran.lag_sum)},
                   {"lag_norm2", num(res.moran.lag_norm2)}};

  json fits = json::array();
  for (std::size_t i = 0; i < res.fits_with.size(); ++i) {
    fits.push_back(fit_entry(res.fits_with[i], res.pvalues_with[i],
                             residual_diagnostics(res.fits_with[i], res.w, res.z),
                             res.moran.n));
  }
  fits.push_back(fit_entry(res.fit_without, res.pvalues_without,
                           residual_diagnostics(res.fit_without, res.w, res.z),
                           res.moran.n));
  root["fits"] = fits;

  root["route_agreement"] = {{"max_da", num(res.comparison.max_da)},
                             {"max_db", num(res.comparison.max_db)}};

  root["bounds"] = {{"set1", interval(res.bounds.set1)},
                    {"set2", interval(res.bounds.set2)},
                    {"set3", interval(res.bounds.set3)},
                    {"index", num(res.bounds.index)},
                    {"set2_quantity", num(res.bounds.set2_quantity)},
                    {"set2_theoretical_quantity", num(res.bounds.set2_theoretical_quantity)},
                    {"set2_crosscheck_max_diff", num(res.bounds.set2_crosscheck_max_diff)},
                    {"set3_quantity", num(res.bounds.set3_quantity)},
                    {"set1_satisfied", res.bounds.set1_satisfied},
                    {"set2_satisfied", res.bounds.set2_satisfied},
                    {"set3_satisfied", res.bounds.set3_satisfied},
                    {"intersection_for_I", interval(res.bounds.intersection_for_I)},
                    {"attain_lower", num(res.bounds.attain_lower)},
                    {"attain_upper", num(res.bounds.attain_upper)}};

  root["outer_product"] = {{"residual", num(res.outer.residual)},
                           {"trace_residual", num(res.outer.trace_residual)},
                           {"eigen_offset", num(res.outer.eigen_offset)},
                           {"eigen_spurious", num(res.outer.eigen_spurious)},
                           {"eigen_checked", res.outer.eigen_checked}};

  json checks;
  for (const IdentityCheck& c : res.checks) {
    checks[c.name] = {{"residual", num(c.residual)}, {"pass", c.pass}};
  }
  root["identity_checks"] = checks;

  if (res.getis) {
    root["getis"] = {{"index", num(res.getis->index)},
                     {"zeta", num(res.getis->zeta)},
                     {"identity_residual", num(res.getis->identity_residual)}};
  }

  json quads;
  for (int q = 1; q <= 4; ++q) {
    quads[quadrant_name(q)] = res.scatter.quadrant_counts[static_cast<std::size_t>(q - 1)];
  }
  root["scatterplot"] = {{"slope", num(res.scatter.line_intercept.slope)},
                         {"intercept", num(res.scatter.line_intercept.intercept)},
                         {"quadrant_counts", quads}};

  return root.dump(2) + "\n";
}

std::vector<std::string> write_outputs(const AnalysisResult& res,
                                       const AnalysisConfig& cfg) {
  std::filesystem::create_directories(cfg.output_dir);
  std::vector<std::string> written;
  if (cfg.emit_json) {
    const std::string path = cfg.output_dir + "/report.json";
    csv::write_file_atomic(path, report_json(res, cfg));
    written.push_back(path);
  }
  if (cfg.emit_csv) {
    const std::string path = cfg.output_dir + "/scatter.csv";
    csv::write_file_atomic(path, render_csv(res.scatter));
    written.push_back(path);
  }
  if (cfg.emit_svg) {
    const std::string path = cfg.output_dir + "/scatter.svg";
    csv::write_file_atomic(path, render_svg(res.scatter, cfg.svg_width, cfg.svg_height));
    written.push_back(path);
  }
  return written;
}

}  // namespace moran
