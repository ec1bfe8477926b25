#ifndef GAPFLOW_DIAGNOSTICS_HPP_
#define GAPFLOW_DIAGNOSTICS_HPP_

#include <string>
#include <vector>

#include "gapflow/superposition.hpp"

namespace gapflow {

struct RenewalTestResult {
    double statistic = 0.0;  // z = r1 * sqrt(n - 1)
    double p_value = 1.0;    // two-sided, normal approximation
    std::size_t n = 0;
    std::string method;
    double alpha = 0.05;
    bool reject = false;
};

struct GofResult {
    double ks_statistic = 0.0;  // sup |F_emp - F_model|
    double p_value = 1.0;       // asymptotic Kolmogorov distribution
    std::size_t n = 0;
};

struct DensityRow {
    double bin_center;
    double empirical_density;
    double model_pdf;
};

struct DensityTable {
    std::vector<DensityRow> rows;
    // fraction of the sample beyond g_max, excluded from the histogram
    double mass_beyond_gmax = 0.0;
};

// Rank-based lag-1 serial-correlation test of interval independence
// (the renewal-hypothesis check): Spearman correlation r1 between
// successive gaps, z = r1 * sqrt(n - 1) against a standard normal.
RenewalTestResult renewal_test(const std::vector<double>& gaps,
                               double alpha = 0.05);

// One-sample Kolmogorov-Smirnov statistic of the gaps against the
// model's gap cdf, asymptotic p-value.
GofResult ks_gof(const std::vector<double>& gaps,
                 const SuperposedGapModel& model);

// Equal-width histogram on [0, g_max] next to the model pdf at bin
// centers; plot-ready.
DensityTable density_table(const std::vector<double>& gaps,
                           const SuperposedGapModel& model, std::size_t bins,
                           double g_max);

}  // namespace gapflow

#endif  // GAPFLOW_DIAGNOSTICS_HPP_
