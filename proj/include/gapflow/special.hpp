#ifndef GAPFLOW_SPECIAL_HPP_
#define GAPFLOW_SPECIAL_HPP_

#include <functional>

// Special functions and quadrature used by the distribution machinery.
namespace gapflow::special {

// Regularized lower incomplete gamma P(k, x).  Series expansion for
// x < k + 1, continued fraction otherwise; relative accuracy ~1e-14.
double reg_lower_gamma(double k, double x);

// Regularized upper incomplete gamma Q(k, x) = 1 - P(k, x).
double reg_upper_gamma(double k, double x);

// Survival function of the Kolmogorov distribution,
// Q(lambda) = 2 * sum_{i>=1} (-1)^{i-1} exp(-2 i^2 lambda^2).
double kolmogorov_sf(double lambda);

struct QuadratureResult {
    double value;
    double abs_error;   // achieved error estimate
    bool converged;
};

// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b].
// Bisects until the local K15-G7 error estimate meets abs_tol or the
// subdivision cap is hit.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-8,
                           int max_subdivisions = 10000);

}  // namespace gapflow::special

#endif  // GAPFLOW_SPECIAL_HPP_
