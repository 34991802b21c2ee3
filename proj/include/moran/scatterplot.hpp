// Normalized autocorrelation scatterplot: points (z_i, (nWz)_i), a solid
// through-origin trend line with slope I, and a dashed trend line with the
// same slope and the fitted intercept. The two lines coincide exactly when
// (Wz)'o = 0.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "moran/common.hpp"
#include "moran/models.hpp"
#include "moran/table.hpp"
#include "moran/weights.hpp"

namespace moran {

struct ScatterPoint {
  std::string id;
  double z = 0;     // abscissa
  double n_wz = 0;  // ordinate
  int quadrant = 0; // 1=HH, 2=LH, 3=LL, 4=HL
};

struct TrendLine {
  double slope = 0;
  double intercept = 0;
};

struct ScatterplotSpec {
  std::vector<ScatterPoint> points;
  TrendLine line_standard;   // through the origin
  TrendLine line_intercept;
  std::array<double, 2> x_range{};  // symmetric about 0, padded 10%
  std::array<double, 2> y_range{};
  std::array<int, 4> quadrant_counts{};  // HH, LH, LL, HL
};

const char* quadrant_name(int quadrant);

// Points on an axis belong to the lowest-numbered closed quadrant that
// contains them (HH before LH before LL before HL).
int classify_quadrant(double z, double n_wz);

ScatterplotSpec build_scatterplot(const WeightMatrix& w, const StandardizedVector& z,
                                  const ModelFit& fit_with, const ModelFit& fit_without,
                                  const std::vector<std::string>& ids);

// CSV: header id,z,n_wz,quadrant; one row per point; trailing comment line
// `# slope=<I> intercept=<a>`. Values printed at 12 significant digits.
std::string render_csv(const ScatterplotSpec& spec);

// Standalone SVG 1.1: axes through the origin, circle markers, solid
// standard trend, dashed intercept trend, legend with I and a at 4 decimals.
// width and height must be at least 100.
std::string render_svg(const ScatterplotSpec& spec, int width_px, int height_px);

void emit_csv(const ScatterplotSpec& spec, const std::string& path);
void emit_svg(const ScatterplotSpec& spec, const std::string& path, int width_px,
              int height_px);

}  // namespace moran
