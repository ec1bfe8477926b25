#include "gapflow/distributions.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "gapflow/special.hpp"

namespace gapflow {

std::string family_name(Family f) {
    switch (f) {
        case Family::Exponential: return "exponential";
        case Family::Gamma: return "gamma";
        case Family::LogLogistic: return "loglogistic";
    }
    throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "exponential") return Family::Exponential;
    if (name == "gamma") return Family::Gamma;
    if (name == "loglogistic" || name == "log-logistic")
        return Family::LogLogistic;
    throw std::invalid_argument("unknown distribution family: " + name);
}

int family_param_count(Family f) {
    return f == Family::Exponential ? 1 : 2;
}

HeadwayModel::HeadwayModel(Family family, std::vector<double> params,
                           double mean)
    : family_(family), params_(std::move(params)), mean_(mean) {}

HeadwayModel HeadwayModel::exponential(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::invalid_argument("exponential: rate must be positive");
    return HeadwayModel(Family::Exponential, {rate}, 1.0 / rate);
}

HeadwayModel HeadwayModel::gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) ||
        !std::isfinite(rate))
        throw std::invalid_argument("gamma: shape and rate must be positive");
    return HeadwayModel(Family::Gamma, {shape, rate}, shape / rate);
}

HeadwayModel HeadwayModel::log_logistic(double scale, double shape) {
    if (!(scale > 0.0) || !(shape > 0.0) || !std::isfinite(scale) ||
        !std::isfinite(shape))
        throw std::invalid_argument(
            "log_logistic: scale and shape must be positive");
    if (shape <= 1.0)
        throw std::invalid_argument(
            "log_logistic: shape must exceed 1 for a finite mean");
    const double pi_over_b = M_PI / shape;
    const double mean = scale * pi_over_b / std::sin(pi_over_b);
    return HeadwayModel(Family::LogLogistic, {scale, shape}, mean);
}

HeadwayModel HeadwayModel::from_params(Family family,
                                       const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != family_param_count(family))
        throw std::invalid_argument("wrong parameter count for family");
    switch (family) {
        case Family::Exponential: return exponential(params[0]);
        case Family::Gamma: return gamma(params[0], params[1]);
        case Family::LogLogistic: return log_logistic(params[0], params[1]);
    }
    throw std::logic_error("unknown family");
}

double HeadwayModel::pdf(double y) const {
    if (y < 0.0) throw std::domain_error("pdf: y must be >= 0");
    switch (family_) {
        case Family::Exponential: {
            const double lambda = params_[0];
            return lambda * std::exp(-lambda * y);
        }
        case Family::Gamma: {
            const double k = params_[0], lambda = params_[1];
            if (y == 0.0) {
                if (k < 1.0) return std::numeric_limits<double>::infinity();
                return k == 1.0 ? lambda : 0.0;
            }
            return std::exp(k * std::log(lambda) + (k - 1.0) * std::log(y) -
                            lambda * y - std::lgamma(k));
        }
        case Family::LogLogistic: {
            const double alpha = params_[0], beta = params_[1];
            if (y == 0.0) return beta > 1.0 ? 0.0 : beta / alpha;
            const double r = std::pow(y / alpha, beta);
            const double denom = 1.0 + r;
            return (beta / y) * r / (denom * denom);
        }
    }
    throw std::logic_error("unknown family");
}

double HeadwayModel::cdf(double y) const {
    if (y < 0.0) throw std::domain_error("cdf: y must be >= 0");
    switch (family_) {
        case Family::Exponential:
            return -std::expm1(-params_[0] * y);
        case Family::Gamma:
            return special::reg_lower_gamma(params_[0], params_[1] * y);
        case Family::LogLogistic: {
            if (y == 0.0) return 0.0;
            const double r = std::pow(y / params_[0], params_[1]);
            return r / (1.0 + r);
        }
    }
    throw std::logic_error("unknown family");
}

double HeadwayModel::survival(double y) const {
    if (y < 0.0) throw std::domain_error("survival: y must be >= 0");
    switch (family_) {
        case Family::Exponential:
            return std::exp(-params_[0] * y);
        case Family::Gamma:
            return special::reg_upper_gamma(params_[0], params_[1] * y);
        case Family::LogLogistic: {
            if (y == 0.0) return 1.0;
            const double r = std::pow(y / params_[0], params_[1]);
            return 1.0 / (1.0 + r);
        }
    }
    throw std::logic_error("unknown family");
}

namespace {

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa, strictly inside (0, 1)
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

double sample_std_normal(std::mt19937_64& rng) {
    // Box-Muller; one value per call keeps the stream seed-stable
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Marsaglia-Tsang for shape >= 1; boosted by U^{1/k} below 1.
double sample_gamma(double shape, double rate, std::mt19937_64& rng) {
    if (shape < 1.0) {
        const double u = uniform01(rng);
        return sample_gamma(shape + 1.0, rate, rng) *
               std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = sample_std_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v / rate;
    }
}

}  // namespace

std::vector<double> sample_headways(const HeadwayModel& model, std::size_t n,
                                    std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_headways: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    switch (model.family()) {
        case Family::Exponential: {
            const double lambda = model.params()[0];
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(-std::log(uniform01(rng)) / lambda);
            break;
        }
        case Family::Gamma: {
            const double k = model.params()[0], lambda = model.params()[1];
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(sample_gamma(k, lambda, rng));
            break;
        }
        case Family::LogLogistic: {
            const double alpha = model.params()[0], beta = model.params()[1];
            for (std::size_t i = 0; i < n; ++i) {
                const double u = uniform01(rng);
                out.push_back(alpha * std::pow(u / (1.0 - u), 1.0 / beta));
            }
            break;
        }
    }
    return out;
}

}  // namespace gapflow
