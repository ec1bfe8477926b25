#ifndef GAPFLOW_RESIDUAL_HPP_
#define GAPFLOW_RESIDUAL_HPP_

#include "gapflow/distributions.hpp"

namespace gapflow {

// Equilibrium (large-t) remaining-time distribution of one renewal
// component:
//   pdf  f_Y(y) = (1/mu) * [1 - F_H(y)]
//   cdf  F_Y(y) = (1/mu) * integral_0^y [1 - F_H(h)] dh
//
// Exponential components use memorylessness, Gamma components use the
// integration-by-parts identity
//   integral_0^y S(h) dh = y*S(y) + (k/lambda)*P_gamma(k+1, lambda*y),
// anything else falls back to adaptive quadrature.
class ResidualView {
  public:
    explicit ResidualView(HeadwayModel source, double quad_tol = 1e-8);

    const HeadwayModel& source() const { return source_; }

    double pdf(double y) const;
    double cdf(double y) const;
    // 1 - cdf(y), accurate in the far tail.
    double survival(double y) const;

  private:
    HeadwayModel source_;
    double quad_tol_;
};

}  // namespace gapflow

#endif  // GAPFLOW_RESIDUAL_HPP_
