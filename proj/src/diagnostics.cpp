#include "gapflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gapflow/special.hpp"

namespace gapflow {

namespace {

// midranks, ties averaged
std::vector<double> ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&values](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
        const double mid = 0.5 * (static_cast<double>(i) +
                                  static_cast<double>(j)) + 1.0;
        for (std::size_t q = i; q <= j; ++q) r[idx[q]] = mid;
        i = j + 1;
    }
    return r;
}

double std_normal_sf(double z) {
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

}  // namespace

RenewalTestResult renewal_test(const std::vector<double>& gaps, double alpha) {
    const std::size_t n = gaps.size();
    if (n < 30)
        throw std::invalid_argument("renewal_test: need at least 30 gaps");
    const auto r = ranks(gaps);
    const double mean = std::accumulate(r.begin(), r.end(), 0.0) /
                        static_cast<double>(n);
    double var = 0.0;
    for (double v : r) var += (v - mean) * (v - mean);
    if (var == 0.0)
        throw std::invalid_argument("renewal_test: constant gap sequence");
    double cov = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        cov += (r[i] - mean) * (r[i + 1] - mean);
    const double r1 = cov / var;
    const double z = r1 * std::sqrt(static_cast<double>(n) - 1.0);
    RenewalTestResult result;
    result.statistic = z;
    result.p_value = 2.0 * std_normal_sf(std::abs(z));
    result.n = n;
    result.method = "rank lag-1 serial correlation (normal approximation)";
    result.alpha = alpha;
    result.reject = result.p_value < alpha;
    return result;
}

GofResult ks_gof(const std::vector<double>& gaps,
                 const SuperposedGapModel& model) {
    if (gaps.empty()) throw std::invalid_argument("ks_gof: empty sample");
    std::vector<double> sorted(gaps);
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = model.gap_cdf(sorted[i]);
        d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                                 f - static_cast<double>(i) / n));
    }
    GofResult result;
    result.ks_statistic = d;
    result.n = sorted.size();
    result.p_value = special::kolmogorov_sf(std::sqrt(n) * d);
    return result;
}

DensityTable density_table(const std::vector<double>& gaps,
                           const SuperposedGapModel& model, std::size_t bins,
                           double g_max) {
    if (bins < 5) throw std::invalid_argument("density_table: bins must be >= 5");
    if (!(g_max > 0.0))
        throw std::invalid_argument("density_table: g_max must be > 0");
    if (gaps.empty()) throw std::invalid_argument("density_table: empty sample");
    const double width = g_max / static_cast<double>(bins);
    std::vector<std::size_t> counts(bins, 0);
    std::size_t beyond = 0;
    for (double g : gaps) {
        if (g < 0.0 || g >= g_max) {
            ++beyond;
            continue;
        }
        const auto b = std::min<std::size_t>(
            bins - 1, static_cast<std::size_t>(g / width));
        ++counts[b];
    }
    DensityTable table;
    table.mass_beyond_gmax =
        static_cast<double>(beyond) / static_cast<double>(gaps.size());
    table.rows.reserve(bins);
    const double n = static_cast<double>(gaps.size());
    for (std::size_t b = 0; b < bins; ++b) {
        const double center = (static_cast<double>(b) + 0.5) * width;
        table.rows.push_back({center,
                              static_cast<double>(counts[b]) / (n * width),
                              model.gap_pdf(center)});
    }
    return table;
}

}  // namespace gapflow
