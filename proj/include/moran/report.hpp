// End-to-end pipeline: load -> standardize -> weights -> index -> fits ->
// bounds -> scatterplot -> identity checks, plus the JSON report emitter.
// Pure computation lives in run_analysis / run_analysis_core; file output is
// separate so the verification and plotting front ends can reuse the run.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moran/bounds.hpp"
#include "moran/common.hpp"
#include "moran/models.hpp"
#include "moran/moran.hpp"
#include "moran/scatterplot.hpp"
#include "moran/table.hpp"
#include "moran/weights.hpp"

namespace moran {

struct AnalysisConfig {
  std::string attribute_path;
  std::string distance_path;
  std::string column;
  bool log_transform = false;
  std::vector<Route> routes = {Route::closed_form, Route::normal_equations,
                               Route::cramer, Route::generic_ls};
  std::string output_dir = ".";
  bool emit_json = true;
  bool emit_csv = true;
  bool emit_svg = true;
  bool getis = true;  // computed only when every raw value is positive
  int svg_width = 640;
  int svg_height = 480;
};

struct IdentityCheck {
  std::string name;
  double residual = 0;
  bool pass = false;
};

struct AnalysisResult {
  std::vector<std::string> ids;
  Vector raw;  // the selected column before any transform
  StandardizedVector z;
  WeightMatrix w;
  MoranResult moran;

  // One with-intercept fit per requested route plus the zero-intercept fit;
  // checks, bounds and the scatterplot always use a closed-form fit so they
  // do not depend on the requested route list.
  std::vector<ModelFit> fits_with;
  std::vector<PValues> pvalues_with;  // aligned with fits_with
  ModelFit fit_without;
  PValues pvalues_without;
  ModelFit canonical;
  RouteComparison comparison;

  BoundsReport bounds;
  OuterProductCheck outer;
  std::optional<GetisOrdResult> getis;
  ScatterplotSpec scatter;

  std::vector<IdentityCheck> checks;  // eq2 ... table4_getis
  bool all_checks_pass = false;
};

AnalysisResult run_analysis_core(const AttributeTable& table, const DistanceMatrix& dist,
                                 const AnalysisConfig& cfg);
AnalysisResult run_analysis(const AnalysisConfig& cfg);  // loads the two files

// Containment checks for the three bound sets, same shape as the identity
// checks (residual = amount by which the quantity escapes the interval).
std::vector<IdentityCheck> bounds_checks(const BoundsReport& bounds);

// Deterministic JSON text: schema 1, sorted keys, 12-significant-digit
// doubles, NaN serialized as null.
std::string report_json(const AnalysisResult& result, const AnalysisConfig& cfg);

// Writes report.json / scatter.csv / scatter.svg per the emit flags.
// Returns the paths written.
std::vector<std::string> write_outputs(const AnalysisResult& result,
                                       const AnalysisConfig& cfg);

}  // namespace moran
