#include "gapflow/residual.hpp"

#include <cmath>
#include <stdexcept>

#include "gapflow/special.hpp"

namespace gapflow {

namespace {

// Upper truncation point for tail integrals: smallest y with
// headway survival below 1e-14.
double tail_cutoff(const HeadwayModel& m) {
    switch (m.family()) {
        case Family::Exponential:
            return 14.0 * std::log(10.0) / m.params()[0];
        case Family::Gamma: {
            // crude bracket + bisection on the survival function
            double hi = m.mean();
            while (m.survival(hi) > 1e-14) hi *= 2.0;
            return hi;
        }
        case Family::LogLogistic:
            return m.params()[0] * std::pow(1e14, 1.0 / m.params()[1]);
    }
    throw std::logic_error("unknown family");
}

}  // namespace

ResidualView::ResidualView(HeadwayModel source, double quad_tol)
    : source_(std::move(source)), quad_tol_(quad_tol) {
    if (!(quad_tol > 0.0))
        throw std::invalid_argument("ResidualView: tolerance must be > 0");
}

double ResidualView::pdf(double y) const {
    if (y < 0.0) throw std::domain_error("residual pdf: y must be >= 0");
    return source_.survival(y) / source_.mean();
}

double ResidualView::cdf(double y) const {
    if (y < 0.0) throw std::domain_error("residual cdf: y must be >= 0");
    if (y == 0.0) return 0.0;
    switch (source_.family()) {
        case Family::Exponential:
            // memoryless: residual law equals the headway law
            return source_.cdf(y);
        case Family::Gamma: {
            const double k = source_.params()[0];
            const double lambda = source_.params()[1];
            const double integral =
                y * source_.survival(y) +
                (k / lambda) * special::reg_lower_gamma(k + 1.0, lambda * y);
            return std::min(1.0, integral / source_.mean());
        }
        case Family::LogLogistic: {
            const auto& m = source_;
            const double cut = std::min(y, tail_cutoff(m));
            const auto q = special::integrate(
                [&m](double h) { return m.survival(h); }, 0.0, cut, quad_tol_);
            if (!q.converged)
                throw std::runtime_error(
                    "residual cdf: quadrature did not reach tolerance " +
                    std::to_string(quad_tol_) + " (achieved " +
                    std::to_string(q.abs_error) + ")");
            return std::min(1.0, q.value / m.mean());
        }
    }
    throw std::logic_error("unknown family");
}

double ResidualView::survival(double y) const {
    if (y < 0.0) throw std::domain_error("residual survival: y must be >= 0");
    switch (source_.family()) {
        case Family::Exponential:
            return source_.survival(y);
        case Family::Gamma: {
            const double k = source_.params()[0];
            const double lambda = source_.params()[1];
            // (1/mu) * int_y^inf S(h) dh = Q(k+1, lambda y) - (y/mu) Q(k, lambda y)
            const double s = special::reg_upper_gamma(k + 1.0, lambda * y) -
                             (y / source_.mean()) * source_.survival(y);
            return std::max(0.0, s);
        }
        case Family::LogLogistic: {
            const double c = cdf(y);
            if (c < 0.9) return 1.0 - c;
            const auto& m = source_;
            const double cut = tail_cutoff(m);
            if (y >= cut) return 0.0;
            const auto q = special::integrate(
                [&m](double h) { return m.survival(h); }, y, cut, quad_tol_);
            return std::max(0.0, q.value / m.mean());
        }
    }
    throw std::logic_error("unknown family");
}

}  // namespace gapflow
