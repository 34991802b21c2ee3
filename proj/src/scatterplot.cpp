#include "moran/scatterplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "moran/csv.hpp"

namespace moran {

namespace {

std::string fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return std::string(buf);
}

// Pixel coordinates; two decimals is plenty and keeps files small & stable.
std::string px(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return std::string(buf);
}

struct Mapper {
  double rx, ry;
  double margin, w, h;
  double x(double v) const { return margin + (v + rx) / (2 * rx) * (w - 2 * margin); }
  double y(double v) const { return h - margin - (v + ry) / (2 * ry) * (h - 2 * margin); }
};

// Portion of y = intercept + slope*x visible inside the axes box, as a pair
// of endpoints in data space; empty optional when the line misses the box.
bool clip_line(const TrendLine& line, double rx, double ry, double* x0, double* y0,
               double* x1, double* y1) {
  double lo = -rx, hi = rx;
  if (line.slope != 0.0) {
    const double xa = (-ry - line.intercept) / line.slope;
    const double xb = (ry - line.intercept) / line.slope;
    lo = std::max(lo, std::min(xa, xb));
    hi = std::min(hi, std::max(xa, xb));
  } else if (std::abs(line.intercept) > ry) {
    return false;
  }
  if (lo > hi) return false;
  *x0 = lo;
  *y0 = line.intercept + line.slope * lo;
  *x1 = hi;
  *y1 = line.intercept + line.slope * hi;
  return true;
}

}  // namespace

const char* quadrant_name(int quadrant) {
  switch (quadrant) {
    case 1: return "HH";
    case 2: return "LH";
    case 3: return "LL";
    case 4: return "HL";
  }
  return "?";
}

int classify_quadrant(double z, double n_wz) {
  if (z >= 0 && n_wz >= 0) return 1;  // HH
  if (z <= 0 && n_wz >= 0) return 2;  // LH
  if (z <= 0 && n_wz <= 0) return 3;  // LL
  return 4;                           // HL
}

ScatterplotSpec build_scatterplot(const WeightMatrix& w, const StandardizedVector& z,
                                  const ModelFit& fit_with, const ModelFit& fit_without,
                                  const std::vector<std::string>& ids) {
  if (z.z.size() != w.n || static_cast<Eigen::Index>(ids.size()) != w.n) {
    throw DimensionError("build_scatterplot: sizes differ");
  }
  if (!fit_with.with_intercept || fit_without.with_intercept) {
    throw DomainError("build_scatterplot: expected one fit of each model");
  }
  const Vector ordinate = static_cast<double>(w.n) * (w.w * z.z);

  ScatterplotSpec spec;
  spec.line_standard = {fit_without.slope, 0.0};
  spec.line_intercept = {fit_with.slope, fit_with.intercept};

  double max_x = 0, max_y = 0;
  for (Eigen::Index i = 0; i < w.n; ++i) {
    ScatterPoint pt;
    pt.id = ids[static_cast<std::size_t>(i)];
    pt.z = z.z(i);
    pt.n_wz = ordinate(i);
    pt.quadrant = classify_quadrant(pt.z, pt.n_wz);
    ++spec.quadrant_counts[static_cast<std::size_t>(pt.quadrant - 1)];
    max_x = std::max(max_x, std::abs(pt.z));
    max_y = std::max(max_y, std::abs(pt.n_wz));
    spec.points.push_back(std::move(pt));
  }
  if (max_x == 0) max_x = 1;  // unreachable for valid z; keeps ranges sane
  if (max_y == 0) max_y = 1;
  spec.x_range = {-1.1 * max_x, 1.1 * max_x};
  spec.y_range = {-1.1 * max_y, 1.1 * max_y};
  return spec;
}

std::string render_csv(const ScatterplotSpec& spec) {
  std::ostringstream out;
  out << "id,z,n_wz,quadrant\n";
  for (const ScatterPoint& pt : spec.points) {
    out << pt.id << ',' << csv::format_sig12(pt.z) << ',' << csv::format_sig12(pt.n_wz)
        << ',' << quadrant_name(pt.quadrant) << '\n';
  }
  out << "# slope=" << csv::format_sig12(spec.line_intercept.slope)
      << " intercept=" << csv::format_sig12(spec.line_intercept.intercept) << '\n';
  return out.str();
}

std::string render_svg(const ScatterplotSpec& spec, int width_px, int height_px) {
  if (width_px < 100 || height_px < 100) {
    throw DomainError("render_svg: width and height must be at least 100 px");
  }
  const Mapper map{spec.x_range[1], spec.y_range[1], 40.0,
                   static_cast<double>(width_px), static_cast<double>(height_px)};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px
      << "\" height=\"" << height_px << "\" viewBox=\"0 0 " << width_px << ' '
      << height_px << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << width_px << "\" height=\"" << height_px
      << "\" fill=\"white\"/>\n";

  // Axes through the origin.
  out << "  <g stroke=\"#888888\" stroke-width=\"1\">\n"
      << "    <line class=\"axis-x\" x1=\"" << px(map.x(spec.x_range[0])) << "\" y1=\""
      << px(map.y(0)) << "\" x2=\"" << px(map.x(spec.x_range[1])) << "\" y2=\""
      << px(map.y(0)) << "\"/>\n"
      << "    <line class=\"axis-y\" x1=\"" << px(map.x(0)) << "\" y1=\""
      << px(map.y(spec.y_range[0])) << "\" x2=\"" << px(map.x(0)) << "\" y2=\""
      << px(map.y(spec.y_range[1])) << "\"/>\n"
      << "  </g>\n";
  out << "  <text x=\"" << px(map.x(spec.x_range[1]) - 12) << "\" y=\""
      << px(map.y(0) - 6) << "\" font-size=\"12\">z</text>\n"
      << "  <text x=\"" << px(map.x(0) + 6) << "\" y=\""
      << px(map.y(spec.y_range[1]) + 12) << "\" font-size=\"12\">n&#183;Wz</text>\n";

  double x0, y0, x1, y1;
  if (clip_line(spec.line_standard, spec.x_range[1], spec.y_range[1], &x0, &y0, &x1,
                &y1)) {
    out << "  <line class=\"trend-standard\" x1=\"" << px(map.x(x0)) << "\" y1=\""
        << px(map.y(y0)) << "\" x2=\"" << px(map.x(x1)) << "\" y2=\"" << px(map.y(y1))
        << "\" stroke=\"#1f5fbf\" stroke-width=\"1.5\"/>\n";
  }
  if (clip_line(spec.line_intercept, spec.x_range[1], spec.y_range[1], &x0, &y0, &x1,
                &y1)) {
    out << "  <line class=\"trend-intercept\" x1=\"" << px(map.x(x0)) << "\" y1=\""
        << px(map.y(y0)) << "\" x2=\"" << px(map.x(x1)) << "\" y2=\"" << px(map.y(y1))
        << "\" stroke=\"#bf3f1f\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
  }

  out << "  <g fill=\"#222222\">\n";
  for (const ScatterPoint& pt : spec.points) {
    out << "    <circle cx=\"" << px(map.x(pt.z)) << "\" cy=\"" << px(map.y(pt.n_wz))
        << "\" r=\"3\"><title>" << pt.id << "</title></circle>\n";
  }
  out << "  </g>\n";

  out << "  <text class=\"legend\" x=\"" << px(44) << "\" y=\"" << px(24)
      << "\" font-size=\"12\">I = " << fixed4(spec.line_intercept.slope)
      << ", a = " << fixed4(spec.line_intercept.intercept) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

void emit_csv(const ScatterplotSpec& spec, const std::string& path) {
  csv::write_file_atomic(path, render_csv(spec));
}

void emit_svg(const ScatterplotSpec& spec, const std::string& path, int width_px,
              int height_px) {
  csv::write_file_atomic(path, render_svg(spec, width_px, height_px));
}

}  // namespace moran
