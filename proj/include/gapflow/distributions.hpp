#ifndef GAPFLOW_DISTRIBUTIONS_HPP_
#define GAPFLOW_DISTRIBUTIONS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gapflow {

enum class Family { Exponential, Gamma, LogLogistic };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Number of free parameters per component for a family.
int family_param_count(Family f);

// One renewal component: the inter-event (headway) distribution of a
// single lane process.  Parameters are validated at construction.
class HeadwayModel {
  public:
    // Exponential(rate)
    static HeadwayModel exponential(double rate);
    // Gamma(shape k, rate lambda)
    static HeadwayModel gamma(double shape, double rate);
    // Log-logistic(scale alpha, shape beta), cdf 1/(1 + (y/alpha)^-beta).
    // beta must exceed 1 so the mean is finite.
    static HeadwayModel log_logistic(double scale, double shape);

    // Generic constructor from a flat parameter vector
    // (Exponential: {rate}; Gamma: {shape, rate}; LogLogistic: {scale, shape}).
    static HeadwayModel from_params(Family family,
                                    const std::vector<double>& params);

    Family family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    double mean() const { return mean_; }

    double pdf(double y) const;
    double cdf(double y) const;
    // 1 - cdf(y), computed without cancellation.
    double survival(double y) const;

    bool operator==(const HeadwayModel&) const = default;

  private:
    HeadwayModel(Family family, std::vector<double> params, double mean);

    Family family_;
    std::vector<double> params_;
    double mean_;
};

// Deterministic sampling of n headways for a fixed seed.
std::vector<double> sample_headways(const HeadwayModel& model, std::size_t n,
                                    std::uint64_t seed);

}  // namespace gapflow

#endif  // GAPFLOW_DISTRIBUTIONS_HPP_
