// The two autocorrelation models fitted by least squares:
//
//   with intercept:  nWz = a o + b z + e
//   zero intercept:  nWz = b z + e*
//
// Both slopes equal the quadratic-form index z'Wz; the intercept equals the
// mean of nWz. Four estimation routes are provided for the intercept model:
//
//   closed_form       textbook univariate slope/intercept formulas
//   normal_equations  the explicit 2x2 normal system of the design [o z]
//   cramer            determinant quotients; the residual inner product
//                     gamma = (Wz)'e it needs is taken from a provisional
//                     closed-form fit (it is not observable before fitting)
//   generic_ls        normal equations on [o z] solved by Gaussian
//                     elimination with partial pivoting
//
// The routes are algebraically equivalent; keeping all four exercises the
// identities that make them equivalent.

#pragma once

#include <string>
#include <vector>

#include "moran/common.hpp"
#include "moran/table.hpp"
#include "moran/weights.hpp"

namespace moran {

enum class Route { closed_form, normal_equations, cramer, generic_ls };

const char* route_name(Route route);
Route route_from_string(const std::string& name);  // throws DomainError

struct ModelFit {
  double intercept = 0;  // 0 for the zero-intercept model
  double slope = 0;      // equals the index I
  Vector residuals;
  double gamma = 0;      // (Wz)'e
  double sigma_e2 = 0;   // e'e/n (population variance of residuals)
  double r_squared = 0;  // centered total sum of squares for both models
  Route route = Route::closed_form;
  bool with_intercept = true;
};

ModelFit fit_with_intercept(const WeightMatrix& w, const StandardizedVector& z,
                            Route route = Route::closed_form);
ModelFit fit_without_intercept(const WeightMatrix& w, const StandardizedVector& z);

// Residuals of the identities tying the fit parameters to the lag vector.
// Entries that only apply to the intercept model are NaN for the other one.
struct Diagnostics {
  double gamma = 0;     // recomputed (Wz)'e
  double sigma_e2 = 0;  // recomputed e'e/n
  double eq9_z = 0;     // |z'e|
  double eq9_o = 0;     // |o'e|            (intercept model only)
  double eq16 = 0;      // |a - (Wz)'o|     (intercept model only)
  double eq23 = 0;      // |gamma - sigma_e2|
  double eq24 = 0;      // |n(Wz)'Wz - I^2 - sigma_e2 - ((Wz)'o)^2|  (intercept model)
                        // |n(Wz)'Wz - I^2 - sigma_e2| for the zero-intercept model
  double b2 = 0;        // |e'e/n - decomposition|, same decomposition as eq24
};

Diagnostics residual_diagnostics(const ModelFit& fit, const WeightMatrix& w,
                                 const StandardizedVector& z);

// R^2 = 1 - SSE / sum((y - mean(y))^2). The centered convention is used for
// the zero-intercept model as well, so its R^2 is comparable (and never
// larger) on the same data. Errors when y is constant.
double r_squared(const ModelFit& fit, const Vector& y);

struct PValues {
  double p_intercept = 0;  // NaN for the zero-intercept model
  double p_slope = 0;
  double t_intercept = 0;  // NaN for the zero-intercept model
  double t_slope = 0;
  int df = 0;
};

// Classical OLS t-tests with n-2 (intercept model) or n-1 residual degrees of
// freedom. The regressor is a z-scored vector, so the normal matrix of the
// design is diagonal with entries n. These tests ignore the spatial
// dependence of the data; treat them as descriptive.
PValues coefficient_p_values(const ModelFit& fit, const Vector& y);

struct RouteComparison {
  std::vector<ModelFit> fits;
  double max_da = 0;  // largest pairwise intercept difference
  double max_db = 0;  // largest pairwise slope difference
};

RouteComparison fit_all_routes(const WeightMatrix& w, const StandardizedVector& z,
                               const std::vector<Route>& routes);

// The power identity behind the determinant route, exposed for verification:
// (n(Wz)'Wz - I^2 - sigma_e2) / (Wz)'o, which equals the intercept.
double intercept_from_power_identity(double n, double lag_norm2, double index,
                                     double sigma_e2, double lag_sum);

// n(Wz)'Wz - I^2 - sigma_e2, which equals ((Wz)'o)^2.
double lag_power_surplus(double n, double lag_norm2, double index, double sigma_e2);

}  // namespace moran
