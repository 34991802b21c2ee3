#include "moran/models.hpp"

#include <cmath>
#include <limits>

#include "moran/student_t.hpp"

namespace moran {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct FitInputs {
  Eigen::Index n;
  Vector lag;       // Wz
  Vector response;  // nWz
  double index;     // z'Wz
  double lag_sum;   // (Wz)'o
};

FitInputs prepare(const WeightMatrix& w, const StandardizedVector& z) {
  if (z.z.size() != w.n) {
    throw DimensionError("model fit: weight matrix and vector sizes differ");
  }
  if (w.n < 3) {
    throw DomainError("model fit: need at least 3 units");
  }
  FitInputs in;
  in.n = w.n;
  in.lag = w.w * z.z;
  in.response = static_cast<double>(w.n) * in.lag;
  in.index = z.z.dot(in.lag);
  in.lag_sum = in.lag.sum();
  return in;
}

// Fills residuals and derived statistics once (a, b) are fixed.
ModelFit finalize(const FitInputs& in, const StandardizedVector& z, double a, double b,
                  Route route, bool with_intercept) {
  ModelFit fit;
  fit.intercept = a;
  fit.slope = b;
  fit.route = route;
  fit.with_intercept = with_intercept;
  fit.residuals = in.response.array() - a - b * z.z.array();
  fit.gamma = in.lag.dot(fit.residuals);
  fit.sigma_e2 = fit.residuals.squaredNorm() / static_cast<double>(in.n);
  fit.r_squared = r_squared(fit, in.response);
  if (std::abs(fit.slope - in.index) > tol().slope_equality) {
    throw NumericError(std::string("model fit (") + route_name(route) +
                       "): slope deviates from the quadratic-form index");
  }
  return fit;
}

std::pair<double, double> estimate_closed_form(const FitInputs& in,
                                               const StandardizedVector& z) {
  const double ybar = in.response.mean();
  const double b = (z.z.dot(in.response) - ybar * z.z.sum()) / z.z.squaredNorm();
  const double a = ybar - b * z.z.mean();
  return {a, b};
}

std::pair<double, double> estimate_normal_equations(const FitInputs& in,
                                                    const StandardizedVector& z) {
  const double n = static_cast<double>(in.n);
  const double sz = z.z.sum();
  const double szz = z.z.squaredNorm();
  const double sy = in.response.sum();
  const double szy = z.z.dot(in.response);
  const double det = n * szz - sz * sz;
  if (std::abs(det) < 1e-12 * n * n) {
    throw NumericError("normal equations: near-singular 2x2 normal matrix");
  }
  return {(szz * sy - sz * szy) / det, (n * szy - sz * sy) / det};
}

std::pair<double, double> estimate_cramer(const FitInputs& in,
                                          const StandardizedVector& z) {
  // gamma is defined through residuals, so a provisional fit supplies it.
  const auto [a0, b0] = estimate_closed_form(in, z);
  const Vector e0 = in.response.array() - a0 - b0 * z.z.array();
  const double gamma = in.lag.dot(e0);

  const double n = static_cast<double>(in.n);
  const double power = n * in.lag.squaredNorm();  // n (Wz)'Wz
  const double det_c = 0.0 * in.index - n * in.lag_sum;
  if (std::abs(det_c) < 1e-12 * n) {
    // The lag sum vanishes, so the quotients degenerate to 0/0; the power
    // identity pins the intercept to the lag sum itself.
    return {in.lag_sum, in.index};
  }
  const double det_a = (n * in.index) * in.index - n * (power - gamma);
  const double det_b = 0.0 * (power - gamma) - (n * in.index) * in.lag_sum;
  return {det_a / det_c, det_b / det_c};
}

// Gaussian elimination with partial pivoting; k is tiny (2 here).
Vector solve_pivoted(Matrix a, Vector b) {
  const Eigen::Index k = a.rows();
  for (Eigen::Index col = 0; col < k; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index row = col + 1; row < k; ++row) {
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
    }
    if (a(pivot, col) == 0.0) {
      throw NumericError("generic least squares: singular normal matrix");
    }
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    for (Eigen::Index row = col + 1; row < k; ++row) {
      const double factor = a(row, col) / a(col, col);
      a.row(row).tail(k - col) -= factor * a.row(col).tail(k - col);
      b(row) -= factor * b(col);
    }
  }
  Vector x(k);
  for (Eigen::Index row = k - 1; row >= 0; --row) {
    double acc = b(row);
    for (Eigen::Index col = row + 1; col < k; ++col) acc -= a(row, col) * x(col);
    x(row) = acc / a(row, row);
  }
  return x;
}

std::pair<double, double> estimate_generic_ls(const FitInputs& in,
                                              const StandardizedVector& z) {
  Matrix design(in.n, 2);
  design.col(0).setOnes();
  design.col(1) = z.z;
  const Matrix normal = design.transpose() * design;
  const Vector rhs = design.transpose() * in.response;
  const Vector beta = solve_pivoted(normal, rhs);
  return {beta(0), beta(1)};
}

}  // namespace

const char* route_name(Route route) {
  switch (route) {
    case Route::closed_form: return "closed_form";
    case Route::normal_equations: return "normal_equations";
    case Route::cramer: return "cramer";
    case Route::generic_ls: return "generic_ls";
  }
  return "?";
}

Route route_from_string(const std::string& name) {
  if (name == "closed_form") return Route::closed_form;
  if (name == "normal_equations") return Route::normal_equations;
  if (name == "cramer") return Route::cramer;
  if (name == "generic_ls") return Route::generic_ls;
  throw DomainError("unknown estimation route '" + name +
                    "' (expected closed_form, normal_equations, cramer or generic_ls)");
}

ModelFit fit_with_intercept(const WeightMatrix& w, const StandardizedVector& z,
                            Route route) {
  const FitInputs in = prepare(w, z);
  std::pair<double, double> ab;
  switch (route) {
    case Route::closed_form: ab = estimate_closed_form(in, z); break;
    case Route::normal_equations: ab = estimate_normal_equations(in, z); break;
    case Route::cramer: ab = estimate_cramer(in, z); break;
    case Route::generic_ls: ab = estimate_generic_ls(in, z); break;
  }
  return finalize(in, z, ab.first, ab.second, route, true);
}

ModelFit fit_without_intercept(const WeightMatrix& w, const StandardizedVector& z) {
  const FitInputs in = prepare(w, z);
  const double b = z.z.dot(in.response) / z.z.squaredNorm();
  return finalize(in, z, 0.0, b, Route::closed_form, false);
}

Diagnostics residual_diagnostics(const ModelFit& fit, const WeightMatrix& w,
                                 const StandardizedVector& z) {
  if (fit.residuals.size() != w.n || z.z.size() != w.n) {
    throw DimensionError("residual_diagnostics: sizes differ");
  }
  const double n = static_cast<double>(w.n);
  const Vector lag = w.w * z.z;
  const double index = z.z.dot(lag);
  const double lag_sum = lag.sum();
  const double power = n * lag.squaredNorm();

  Diagnostics d;
  d.gamma = lag.dot(fit.residuals);
  d.sigma_e2 = fit.residuals.squaredNorm() / n;
  d.eq9_z = std::abs(z.z.dot(fit.residuals));
  d.eq23 = std::abs(d.gamma - d.sigma_e2);
  if (fit.with_intercept) {
    d.eq9_o = std::abs(fit.residuals.sum());
    d.eq16 = std::abs(fit.intercept - lag_sum);
    const double decomposition = power - lag_sum * lag_sum - index * index;
    d.eq24 = std::abs(power - index * index - d.sigma_e2 - lag_sum * lag_sum);
    d.b2 = std::abs(d.sigma_e2 - decomposition);
  } else {
    d.eq9_o = kNaN;
    d.eq16 = kNaN;
    const double decomposition = power - index * index;  // no intercept term
    d.eq24 = std::abs(decomposition - d.sigma_e2);
    d.b2 = std::abs(d.sigma_e2 - decomposition);
  }
  return d;
}

double r_squared(const ModelFit& fit, const Vector& y) {
  if (fit.residuals.size() != y.size()) {
    throw DimensionError("r_squared: residuals and response sizes differ");
  }
  const double ybar = y.mean();
  const double sst = (y.array() - ybar).square().sum();
  if (sst == 0.0) {
    throw NumericError("r_squared: response is constant (zero total sum of squares)");
  }
  return 1.0 - fit.residuals.squaredNorm() / sst;
}

PValues coefficient_p_values(const ModelFit& fit, const Vector& y) {
  const Eigen::Index n = y.size();
  const int params = fit.with_intercept ? 2 : 1;
  const int df = static_cast<int>(n) - params;
  if (df < 1) {
    throw DomainError("coefficient_p_values: insufficient residual degrees of freedom");
  }
  const double s2 = fit.residuals.squaredNorm() / df;
  // The regressor is z-scored (sum 0, squared norm n), so the normal matrix
  // of [o z] is diag(n, n) and both standard errors reduce to s/sqrt(n).
  const double se = std::sqrt(s2 / static_cast<double>(n));

  auto p_of = [&](double coef) {
    if (se == 0.0) return coef == 0.0 ? 1.0 : 0.0;
    return student_t_two_sided_p(coef / se, df);
  };
  auto t_of = [&](double coef) {
    if (se == 0.0) {
      if (coef == 0.0) return 0.0;
      return coef > 0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
    }
    return coef / se;
  };

  PValues p;
  p.df = df;
  p.p_slope = p_of(fit.slope);
  p.t_slope = t_of(fit.slope);
  if (fit.with_intercept) {
    p.p_intercept = p_of(fit.intercept);
    p.t_intercept = t_of(fit.intercept);
  } else {
    p.p_intercept = kNaN;
    p.t_intercept = kNaN;
  }
  return p;
}

RouteComparison fit_all_routes(const WeightMatrix& w, const StandardizedVector& z,
                               const std::vector<Route>& routes) {
  RouteComparison cmp;
  for (Route route : routes) {
    cmp.fits.push_back(fit_with_intercept(w, z, route));
  }
  for (std::size_t i = 0; i < cmp.fits.size(); ++i) {
    for (std::size_t j = i + 1; j < cmp.fits.size(); ++j) {
      cmp.max_da = std::max(cmp.max_da,
                            std::abs(cmp.fits[i].intercept - cmp.fits[j].intercept));
      cmp.max_db = std::max(cmp.max_db, std::abs(cmp.fits[i].slope - cmp.fits[j].slope));
    }
  }
  return cmp;
}

double intercept_from_power_identity(double n, double lag_norm2, double index,
                                     double sigma_e2, double lag_sum) {
  if (lag_sum == 0.0) {
    throw DomainError("intercept_from_power_identity: lag sum is zero");
  }
  return (n * lag_norm2 - index * index - sigma_e2) / lag_sum;
}

double lag_power_surplus(double n, double lag_norm2, double index, double sigma_e2) {
  return n * lag_norm2 - index * index - sigma_e2;
}

}  // namespace moran
