#ifndef GAPFLOW_ESTIMATION_HPP_
#define GAPFLOW_ESTIMATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gapflow/superposition.hpp"

namespace gapflow {

struct FitOptions {
    int n_starts = 8;           // multi-start count
    int max_iterations = 2000;  // per local search
    double rel_tol = 1e-8;      // relative log-likelihood improvement
    double jitter = 0.5;        // +-50% multiplicative jitter on starts
    std::uint64_t seed = 1;     // controls start-point jitter
    int threads = 0;            // 0: GAPFLOW_THREADS env or hardware
};

struct FitReport {
    Family family = Family::Gamma;
    std::size_t L = 1;
    // per component, one row of family parameters
    std::vector<std::vector<double>> estimates;
    std::vector<std::vector<double>> std_errors;  // NaN when unavailable
    std::vector<std::vector<double>> t_values;    // estimate / std error
    double max_loglik = 0.0;
    double aic = 0.0;
    std::size_t n_obs = 0;
    std::size_t n_zero_dropped = 0;
    bool converged = false;
    // true when the observed-information matrix is (numerically) rank
    // deficient, i.e. some parameter directions are not identified
    bool rank_deficient = false;
    int n_function_evals = 0;
    int n_starts_used = 0;
    std::string message;

    std::size_t n_free_params() const;
    SuperposedGapModel to_model() const;
};

struct SelectionResult {
    FitReport best;                // minimum-AIC fit, ties to smaller L
    std::vector<FitReport> table;  // one entry per attempted L, in order
};

// Eq.-style gap log-likelihood: sum_s ln f_G(g_s).  Returns -inf when
// some density evaluates to zero.
double loglik_gaps(const SuperposedGapModel& model,
                   const std::vector<double>& gaps);

// Headway log-likelihood of a single component: sum_m ln f_H(h_m).
double loglik_headways(const HeadwayModel& model,
                       const std::vector<double>& headways);

// Maximum-likelihood fit of an L-component superposed gap model.
// Optimizes in log-parameter space with moment-matched, jittered
// multi-starts; standard errors come from the central-difference
// Hessian at the optimum (pseudo-inverse when singular).
FitReport fit_gaps(const std::vector<double>& gaps, Family family,
                   std::size_t L, const FitOptions& options = {});

// Single-component headway fit (gap fit with L = 1).
FitReport fit_headways(const std::vector<double>& headways, Family family,
                       const FitOptions& options = {});

// Fit every L in [L_min, L_max] and pick the minimum-AIC report.
SelectionResult select_L(const std::vector<double>& gaps, Family family,
                         std::size_t L_min, std::size_t L_max,
                         const FitOptions& options = {});

// One superposed component per lane report (each must have L = 1).
SuperposedGapModel build_model_from_headway_fits(
    const std::vector<FitReport>& reports);

}  // namespace gapflow

#endif  // GAPFLOW_ESTIMATION_HPP_
