// Student-t tail probabilities via the regularized incomplete beta function.

#pragma once

namespace moran {

// I_x(a, b), continued-fraction evaluation. Requires a, b > 0 and x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value P(|T_df| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_sided_p(double t, int df);

}  // namespace moran
