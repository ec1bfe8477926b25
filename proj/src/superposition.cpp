#include "gapflow/superposition.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gapflow {

SuperposedGapModel::SuperposedGapModel(std::vector<HeadwayModel> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument(
            "SuperposedGapModel: at least one component required");
    residuals_.reserve(components_.size());
    total_flow_ = 0.0;
    for (const auto& c : components_) {
        residuals_.emplace_back(c);
        total_flow_ += 1.0 / c.mean();
    }
    weights_.reserve(components_.size());
    for (const auto& c : components_)
        weights_.push_back((1.0 / c.mean()) / total_flow_);
}

namespace {

// prefix[j] = prod_{k < j} v[k], suffix[j] = prod_{k > j} v[k]
void prefix_suffix(const std::vector<double>& v, std::vector<double>& prefix,
                   std::vector<double>& suffix) {
    const std::size_t n = v.size();
    prefix.assign(n, 1.0);
    suffix.assign(n, 1.0);
    for (std::size_t j = 1; j < n; ++j) prefix[j] = prefix[j - 1] * v[j - 1];
    for (std::size_t j = n - 1; j-- > 0;) suffix[j] = suffix[j + 1] * v[j + 1];
}

}  // namespace

CdfPdf SuperposedGapModel::combined_residual(double y) const {
    if (y < 0.0) throw std::domain_error("combined_residual: y must be >= 0");
    const std::size_t n = components_.size();
    std::vector<double> sy(n);
    for (std::size_t j = 0; j < n; ++j) sy[j] = residuals_[j].survival(y);
    std::vector<double> prefix, suffix;
    prefix_suffix(sy, prefix, suffix);
    const double prod_all = prefix[n - 1] * sy[n - 1];
    double pdf = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        pdf += (1.0 / components_[j].mean()) * components_[j].survival(y) *
               prefix[j] * suffix[j];
    }
    return {1.0 - prod_all, pdf};
}

double SuperposedGapModel::gap_cdf(double g) const {
    if (g < 0.0) throw std::domain_error("gap_cdf: g must be >= 0");
    const std::size_t n = components_.size();
    std::vector<double> sy(n);
    for (std::size_t j = 0; j < n; ++j) sy[j] = residuals_[j].survival(g);
    std::vector<double> prefix, suffix;
    prefix_suffix(sy, prefix, suffix);
    double sg = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        sg += weights_[j] * components_[j].survival(g) * prefix[j] * suffix[j];
    return std::min(1.0, std::max(0.0, 1.0 - sg));
}

double SuperposedGapModel::gap_pdf(double g) const {
    if (g < 0.0) throw std::domain_error("gap_pdf: g must be >= 0");
    const std::size_t n = components_.size();
    std::vector<double> sy(n), fy(n), sh(n), fh(n);
    for (std::size_t j = 0; j < n; ++j) {
        sy[j] = residuals_[j].survival(g);
        fy[j] = residuals_[j].pdf(g);
        sh[j] = components_[j].survival(g);
        fh[j] = components_[j].pdf(g);
    }
    std::vector<double> prefix, suffix;
    prefix_suffix(sy, prefix, suffix);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double prod_wo_j = prefix[j] * suffix[j];
        double renewal_term = fh[j] * prod_wo_j;
        double cross = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            double prod_wo_jk = 1.0;
            for (std::size_t m = 0; m < n; ++m)
                if (m != j && m != k) prod_wo_jk *= sy[m];
            cross += fy[k] * prod_wo_jk;
        }
        total += weights_[j] * (renewal_term + sh[j] * cross);
    }
    if (!std::isfinite(total)) return 0.0;
    return std::max(0.0, total);
}

std::vector<CdfPdf> SuperposedGapModel::gap_grid(
    const std::vector<double>& grid) const {
    std::vector<CdfPdf> out;
    out.reserve(grid.size());
    for (double g : grid) out.push_back({gap_cdf(g), gap_pdf(g)});
    return out;
}

std::function<double(double)> exponential_gap_cdf(
    const std::vector<double>& rates) {
    if (rates.empty())
        throw std::domain_error("exponential_gap_cdf: empty rate list");
    double total = 0.0;
    for (double r : rates) {
        if (!(r > 0.0))
            throw std::domain_error(
                "exponential_gap_cdf: rates must be positive");
        total += r;
    }
    return [total](double g) { return -std::expm1(-total * g); };
}

}  // namespace gapflow
