#pragma once

#include "fracpolya/domain.hpp"

namespace fracpolya::specfun {

// ln Gamma(x) for x > 0. Relative error below 1e-13 on (0, 50], including
// near the zeros at x = 1 and x = 2.
double log_gamma(double x);

double gamma(double x);

// omega_d = pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(Dimension d);

// C_d = (2 pi)^d / omega_d, the constant in the Weyl law.
double weyl_constant(Dimension d);

// The Weyl term (n C_d / V)^{alpha/d}, evaluated in log space.
double polya_term(long n, const DomainSpec& dom, double alpha);

}  // namespace fracpolya::specfun
