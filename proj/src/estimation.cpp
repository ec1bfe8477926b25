#include "gapflow/estimation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "gapflow/special.hpp"

namespace gapflow {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int resolve_threads(const FitOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("GAPFLOW_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Gap log-likelihood (Eq.-6 density, summed logs) as a function of the
// flat log-parameter vector of L components.  Gaps are held sorted so
// quadrature-backed families can accumulate their residual integral in
// a single sweep.
class GapLogLik {
  public:
    GapLogLik(std::vector<double> gaps, Family family, std::size_t L)
        : gaps_(std::move(gaps)), family_(family), L_(L) {
        std::sort(gaps_.begin(), gaps_.end());
    }

    std::size_t dim() const { return L_ * family_param_count(family_); }
    const std::vector<double>& gaps() const { return gaps_; }

    // log-likelihood; -inf for invalid parameters or a vanishing density
    double operator()(const std::vector<double>& log_params) const {
        ++n_evals_;
        const std::size_t S = gaps_.size();
        const int ppc = family_param_count(family_);
        std::vector<std::vector<double>> params(L_);
        std::vector<double> mu(L_);
        for (std::size_t j = 0; j < L_; ++j) {
            params[j].resize(ppc);
            for (int q = 0; q < ppc; ++q) {
                const double v = std::exp(log_params[j * ppc + q]);
                if (!std::isfinite(v) || v <= 0.0) return kNegInf;
                params[j][q] = v;
            }
            if (family_ == Family::LogLogistic && params[j][1] <= 1.0)
                return kNegInf;  // infinite mean
            mu[j] = component_mean(params[j]);
            if (!std::isfinite(mu[j]) || mu[j] <= 0.0) return kNegInf;
        }
        double flow = 0.0;
        for (std::size_t j = 0; j < L_; ++j) flow += 1.0 / mu[j];

        // component-major tables of S_H, f_H, S_Y, f_Y over sorted gaps
        std::vector<std::vector<double>> sh(L_), fh(L_), sy(L_), fy(L_);
        for (std::size_t j = 0; j < L_; ++j) {
            sh[j].resize(S);
            fh[j].resize(S);
            sy[j].resize(S);
            fy[j].resize(S);
            tabulate_component(params[j], mu[j], sh[j], fh[j], sy[j], fy[j]);
        }

        double loglik = 0.0;
        std::vector<double> syg(L_);
        for (std::size_t s = 0; s < S; ++s) {
            for (std::size_t j = 0; j < L_; ++j) syg[j] = sy[j][s];
            double density = 0.0;
            for (std::size_t j = 0; j < L_; ++j) {
                double prod_wo_j = 1.0;
                for (std::size_t k = 0; k < L_; ++k)
                    if (k != j) prod_wo_j *= syg[k];
                double cross = 0.0;
                for (std::size_t k = 0; k < L_; ++k) {
                    if (k == j) continue;
                    double prod_wo_jk = 1.0;
                    for (std::size_t m = 0; m < L_; ++m)
                        if (m != j && m != k) prod_wo_jk *= syg[m];
                    cross += fy[k][s] * prod_wo_jk;
                }
                const double w = (1.0 / mu[j]) / flow;
                density += w * (fh[j][s] * prod_wo_j + sh[j][s] * cross);
            }
            if (!(density > 0.0) || !std::isfinite(density)) return kNegInf;
            loglik += std::log(density);
        }
        return loglik;
    }

    long evals() const { return n_evals_; }

  private:
    double component_mean(const std::vector<double>& p) const {
        switch (family_) {
            case Family::Exponential: return 1.0 / p[0];
            case Family::Gamma: return p[0] / p[1];
            case Family::LogLogistic: {
                const double q = M_PI / p[1];
                return p[0] * q / std::sin(q);
            }
        }
        return kNaN;
    }

    void tabulate_component(const std::vector<double>& p, double mu,
                            std::vector<double>& sh, std::vector<double>& fh,
                            std::vector<double>& sy,
                            std::vector<double>& fy) const {
        const std::size_t S = gaps_.size();
        switch (family_) {
            case Family::Exponential: {
                const double lambda = p[0];
                for (std::size_t s = 0; s < S; ++s) {
                    const double e = std::exp(-lambda * gaps_[s]);
                    sh[s] = e;
                    fh[s] = lambda * e;
                    sy[s] = e;  // memoryless
                    fy[s] = lambda * e;
                }
                break;
            }
            case Family::Gamma: {
                const double k = p[0], lambda = p[1];
                const double lg = std::lgamma(k);
                for (std::size_t s = 0; s < S; ++s) {
                    const double g = gaps_[s];
                    const double x = lambda * g;
                    const double q = special::reg_upper_gamma(k, x);
                    sh[s] = q;
                    fh[s] = g > 0.0
                                ? std::exp(k * std::log(lambda) +
                                           (k - 1.0) * std::log(g) - x - lg)
                                : (k < 1.0 ? std::numeric_limits<
                                                 double>::infinity()
                                           : (k == 1.0 ? lambda : 0.0));
                    sy[s] = std::max(
                        0.0, special::reg_upper_gamma(k + 1.0, x) -
                                 (g / mu) * q);
                    fy[s] = q / mu;
                }
                break;
            }
            case Family::LogLogistic: {
                const double alpha = p[0], beta = p[1];
                // cumulative integral of the survival over sorted gaps,
                // one Gauss-Kronrod panel per successive interval
                double acc = 0.0;
                double prev = 0.0;
                const auto surv = [alpha, beta](double y) {
                    if (y <= 0.0) return 1.0;
                    return 1.0 / (1.0 + std::pow(y / alpha, beta));
                };
                for (std::size_t s = 0; s < S; ++s) {
                    const double g = gaps_[s];
                    acc += special::integrate(surv, prev, g, 1e-12, 64).value;
                    prev = g;
                    const double sv = surv(g);
                    sh[s] = sv;
                    const double r = g > 0.0 ? std::pow(g / alpha, beta) : 0.0;
                    fh[s] = g > 0.0 ? (beta / g) * r * sv * sv
                                    : (beta > 1.0 ? 0.0 : beta / alpha);
                    sy[s] = std::max(0.0, 1.0 - acc / mu);
                    fy[s] = sv / mu;
                }
                break;
            }
        }
    }

    std::vector<double> gaps_;
    Family family_;
    std::size_t L_;
    mutable std::atomic<long> n_evals_{0};
};

struct NmResult {
    std::vector<double> x;
    double fval = kNegInf;  // maximized log-likelihood
    bool converged = false;
    int iterations = 0;
};

// Nelder-Mead ascent on the log-likelihood (implemented as descent on
// the negative), standard reflection/expansion/contraction/shrink.
NmResult nelder_mead(const GapLogLik& loglik, const std::vector<double>& x0,
                     int max_iter, double rel_tol) {
    const std::size_t d = x0.size();
    const auto f = [&loglik](const std::vector<double>& x) {
        const double ll = loglik(x);
        return -ll;  // minimize
    };
    std::vector<std::vector<double>> simplex(d + 1, x0);
    for (std::size_t i = 0; i < d; ++i) simplex[i + 1][i] += 0.25;
    std::vector<double> fv(d + 1);
    for (std::size_t i = 0; i <= d; ++i) fv[i] = f(simplex[i]);

    NmResult result;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        // order
        std::vector<std::size_t> idx(d + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&fv](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> sx(d + 1);
        std::vector<double> sf(d + 1);
        for (std::size_t i = 0; i <= d; ++i) {
            sx[i] = simplex[idx[i]];
            sf[i] = fv[idx[i]];
        }
        simplex.swap(sx);
        fv.swap(sf);

        if (std::isfinite(fv[0]) &&
            fv[d] - fv[0] < rel_tol * (std::abs(fv[0]) + 1e-10)) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t q = 0; q < d; ++q) centroid[q] += simplex[i][q];
        for (double& c : centroid) c /= static_cast<double>(d);

        const auto blend = [&](double t) {
            std::vector<double> x(d);
            for (std::size_t q = 0; q < d; ++q)
                x[q] = centroid[q] + t * (centroid[q] - simplex[d][q]);
            return x;
        };

        const auto xr = blend(1.0);
        const double fr = f(xr);
        if (fr < fv[0]) {
            const auto xe = blend(2.0);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[d] = xe;
                fv[d] = fe;
            } else {
                simplex[d] = xr;
                fv[d] = fr;
            }
        } else if (fr < fv[d - 1]) {
            simplex[d] = xr;
            fv[d] = fr;
        } else {
            const bool outside = fr < fv[d];
            const auto xc = blend(outside ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[d])) {
                simplex[d] = xc;
                fv[d] = fc;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 1; i <= d; ++i) {
                    for (std::size_t q = 0; q < d; ++q)
                        simplex[i][q] =
                            simplex[0][q] + 0.5 * (simplex[i][q] - simplex[0][q]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= d; ++i)
        if (fv[i] < fv[best]) best = i;
    result.x = simplex[best];
    result.fval = -fv[best];
    result.iterations = iter;
    return result;
}

// Repeated Nelder-Mead from its own optimum until the restart stops
// improving; flat over-parameterized ridges need the fresh simplex.
NmResult polished_nelder_mead(const GapLogLik& loglik,
                              const std::vector<double>& x0, int max_iter,
                              double rel_tol) {
    NmResult best = nelder_mead(loglik, x0, max_iter, rel_tol);
    for (int round = 0; round < 3; ++round) {
        NmResult next = nelder_mead(loglik, best.x, max_iter, rel_tol);
        const bool improved =
            next.fval > best.fval + rel_tol * (std::abs(best.fval) + 1e-10);
        next.iterations += best.iterations;
        if (next.fval >= best.fval) best = next;
        if (!improved) break;
    }
    return best;
}

// Moment-matched start points on the log-parameter scale.
std::vector<std::vector<double>> make_starts(const std::vector<double>& gaps,
                                             Family family, std::size_t L,
                                             const FitOptions& options) {
    const double n = static_cast<double>(gaps.size());
    const double mean =
        std::accumulate(gaps.begin(), gaps.end(), 0.0) / n;
    double var = 0.0;
    for (double g : gaps) var += (g - mean) * (g - mean);
    var = n > 1 ? var / (n - 1) : mean * mean;
    std::vector<double> sorted(gaps);
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];

    // a component carries 1/L of the flow, so its mean is L times the
    // observed mean gap
    const double comp_mean = std::max(1e-8, mean * static_cast<double>(L));
    const double k0 =
        std::clamp(var > 0.0 ? mean * mean / var : 1.0, 0.05, 100.0);

    const int ppc = family_param_count(family);
    std::vector<double> base(static_cast<std::size_t>(ppc) * L);
    for (std::size_t j = 0; j < L; ++j) {
        switch (family) {
            case Family::Exponential:
                base[j] = std::log(1.0 / comp_mean);
                break;
            case Family::Gamma:
                base[2 * j] = std::log(k0);
                base[2 * j + 1] = std::log(k0 / comp_mean);
                break;
            case Family::LogLogistic:
                base[2 * j] = std::log(std::max(1e-8, median *
                                                          static_cast<double>(L)));
                base[2 * j + 1] = std::log(2.5);
                break;
        }
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> jitter(-options.jitter,
                                                  options.jitter);
    std::vector<std::vector<double>> starts;
    starts.push_back(base);
    for (int s = 1; s < options.n_starts; ++s) {
        auto x = base;
        for (double& v : x) v += std::log1p(jitter(rng));
        starts.push_back(std::move(x));
    }
    return starts;
}

// Central-difference Hessian of the log-likelihood in log-parameter
// space; relative step 1e-4.
Eigen::MatrixXd numeric_hessian(const GapLogLik& loglik,
                                const std::vector<double>& x) {
    const std::size_t d = x.size();
    Eigen::MatrixXd hess(d, d);
    std::vector<double> h(d);
    for (std::size_t i = 0; i < d; ++i)
        h[i] = 1e-4 * std::max(1.0, std::abs(x[i]));
    const double f0 = loglik(x);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            double v;
            auto xs = x;
            if (i == j) {
                xs[i] = x[i] + h[i];
                const double fp = loglik(xs);
                xs[i] = x[i] - h[i];
                const double fm = loglik(xs);
                v = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
            } else {
                xs = x;
                xs[i] += h[i];
                xs[j] += h[j];
                const double fpp = loglik(xs);
                xs = x;
                xs[i] += h[i];
                xs[j] -= h[j];
                const double fpm = loglik(xs);
                xs = x;
                xs[i] -= h[i];
                xs[j] += h[j];
                const double fmp = loglik(xs);
                xs = x;
                xs[i] -= h[i];
                xs[j] -= h[j];
                const double fmm = loglik(xs);
                v = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
            }
            hess(i, j) = v;
            hess(j, i) = v;
        }
    }
    return hess;
}

struct ErrorEstimates {
    std::vector<double> se_log;  // std error of log-parameters; NaN entries
    bool rank_deficient = false;
};

// Invert the observed information -H; eigenvalues below 1e-6 * max are
// treated as null directions (unidentified), and any log-parameter with
// weight in a null direction gets a NaN error.  The cutoff sits above
// the central-difference noise floor: with a 1e-4 step, an exactly flat
// direction of a log-likelihood of magnitude |l| shows up as a spurious
// eigenvalue of order eps * |l| / step^2 ~ 1e-8 * |l|, while the
// leading curvature is of order n.
ErrorEstimates standard_errors(const Eigen::MatrixXd& hessian) {
    const auto d = hessian.rows();
    ErrorEstimates out;
    out.se_log.assign(d, kNaN);
    Eigen::MatrixXd info = -hessian;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(info);
    if (eig.info() != Eigen::Success) {
        out.rank_deficient = true;
        return out;
    }
    const Eigen::VectorXd evals = eig.eigenvalues();
    const double max_eval = evals.maxCoeff();
    if (!(max_eval > 0.0)) {
        out.rank_deficient = true;
        return out;
    }
    const double cutoff = 1e-6 * max_eval;
    std::vector<bool> in_null_space(d, false);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index m = 0; m < d; ++m) {
        if (evals(m) <= cutoff) {
            out.rank_deficient = true;
            for (Eigen::Index i = 0; i < d; ++i)
                if (std::abs(eig.eigenvectors()(i, m)) > 1e-3)
                    in_null_space[i] = true;
        } else {
            cov += eig.eigenvectors().col(m) *
                   eig.eigenvectors().col(m).transpose() / evals(m);
        }
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        if (in_null_space[i]) continue;  // unidentified -> NaN
        const double v = cov(i, i);
        if (v > 0.0) out.se_log[i] = std::sqrt(v);
    }
    return out;
}

// Canonical component order: descending flow contribution.
void sort_components(FitReport& report) {
    std::vector<std::size_t> idx(report.L);
    std::iota(idx.begin(), idx.end(), 0);
    const auto flow = [&report](std::size_t j) {
        const auto& p = report.estimates[j];
        switch (report.family) {
            case Family::Exponential: return p[0];
            case Family::Gamma: return p[1] / p[0];
            case Family::LogLogistic: {
                const double q = M_PI / p[1];
                return std::sin(q) / (p[0] * q);
            }
        }
        return 0.0;
    };
    std::stable_sort(idx.begin(), idx.end(), [&flow](std::size_t a,
                                                     std::size_t b) {
        return flow(a) > flow(b);
    });
    const auto permute = [&idx](std::vector<std::vector<double>>& rows) {
        std::vector<std::vector<double>> out;
        out.reserve(rows.size());
        for (std::size_t j : idx) out.push_back(rows[j]);
        rows.swap(out);
    };
    permute(report.estimates);
    permute(report.std_errors);
    permute(report.t_values);
}

FitReport fit_sorted(const std::vector<double>& gaps, Family family,
                     std::size_t L, std::size_t n_zero_dropped,
                     const FitOptions& options) {
    if (L == 0) throw std::invalid_argument("fit: L must be >= 1");
    if (gaps.empty()) throw std::invalid_argument("fit: empty gap sequence");
    const int ppc = family_param_count(family);
    const std::size_t p = L * ppc;
    if (p >= gaps.size())
        throw std::invalid_argument(
            "fit: more free parameters than observations");

    const GapLogLik loglik(gaps, family, L);
    auto starts = make_starts(gaps, family, L, options);
    // cascade start: dominant component from the L = 1 optimum, the
    // rest with vanishing flow (the over-parameterized ridge)
    if (L > 1) {
        FitOptions sub = options;
        sub.n_starts = std::max(2, options.n_starts / 2);
        const FitReport base =
            fit_sorted(gaps, family, 1, n_zero_dropped, sub);
        std::vector<double> cascade(p);
        for (std::size_t j = 0; j < L; ++j)
            for (int q = 0; q < ppc; ++q)
                cascade[j * ppc + q] = std::log(base.estimates[0][q]);
        for (std::size_t j = 1; j < L; ++j) {
            // shrink the rate (last parameter for gamma/exponential,
            // grow the scale for log-logistic) to push the flow to zero
            if (family == Family::LogLogistic)
                cascade[j * ppc] += std::log(1e4);
            else
                cascade[j * ppc + ppc - 1] += std::log(1e-4);
        }
        starts.push_back(std::move(cascade));
    }

    const int threads = std::min<int>(resolve_threads(options),
                                      static_cast<int>(starts.size()));
    std::vector<NmResult> results(starts.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= starts.size()) break;
            results[i] = polished_nelder_mead(loglik, starts[i],
                                              options.max_iterations,
                                              options.rel_tol);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].fval > results[best].fval) best = i;
    const NmResult& opt = results[best];
    if (!std::isfinite(opt.fval))
        throw std::runtime_error(
            "fit: no start converged to a finite log-likelihood");

    FitReport report;
    report.family = family;
    report.L = L;
    report.n_obs = gaps.size();
    report.n_zero_dropped = n_zero_dropped;
    report.max_loglik = opt.fval;
    report.converged = opt.converged;
    report.n_starts_used = static_cast<int>(starts.size());
    report.n_function_evals = static_cast<int>(loglik.evals());
    report.aic = 2.0 * static_cast<double>(p) - 2.0 * opt.fval;
    if (gaps.size() < 10 * p)
        report.message = "fewer than 10 observations per free parameter";

    const Eigen::MatrixXd hessian = numeric_hessian(loglik, opt.x);
    const ErrorEstimates err = standard_errors(hessian);
    report.rank_deficient = err.rank_deficient;

    report.estimates.resize(L);
    report.std_errors.resize(L);
    report.t_values.resize(L);
    for (std::size_t j = 0; j < L; ++j) {
        report.estimates[j].resize(ppc);
        report.std_errors[j].resize(ppc);
        report.t_values[j].resize(ppc);
        for (int q = 0; q < ppc; ++q) {
            const std::size_t i = j * ppc + q;
            const double estimate = std::exp(opt.x[i]);
            report.estimates[j][q] = estimate;
            // delta method: se(exp(u)) = exp(u) * se(u)
            const double se_log = err.se_log[i];
            report.std_errors[j][q] =
                std::isnan(se_log) ? kNaN : estimate * se_log;
            report.t_values[j][q] =
                std::isnan(se_log) ? kNaN : 1.0 / se_log;
        }
    }
    sort_components(report);
    return report;
}

}  // namespace

std::size_t FitReport::n_free_params() const {
    return L * static_cast<std::size_t>(family_param_count(family));
}

SuperposedGapModel FitReport::to_model() const {
    std::vector<HeadwayModel> components;
    components.reserve(L);
    for (const auto& p : estimates)
        components.push_back(HeadwayModel::from_params(family, p));
    return SuperposedGapModel(std::move(components));
}

double loglik_gaps(const SuperposedGapModel& model,
                   const std::vector<double>& gaps) {
    if (gaps.empty())
        throw std::invalid_argument("loglik_gaps: empty gap sequence");
    double total = 0.0;
    for (double g : gaps) {
        const double d = model.gap_pdf(g);
        if (!(d > 0.0)) return kNegInf;
        total += std::log(d);
    }
    return total;
}

double loglik_headways(const HeadwayModel& model,
                       const std::vector<double>& headways) {
    if (headways.empty())
        throw std::invalid_argument("loglik_headways: empty sequence");
    double total = 0.0;
    for (double h : headways) {
        const double d = model.pdf(h);
        if (!(d > 0.0)) return kNegInf;
        total += std::log(d);
    }
    return total;
}

FitReport fit_gaps(const std::vector<double>& gaps, Family family,
                   std::size_t L, const FitOptions& options) {
    std::vector<double> positive;
    positive.reserve(gaps.size());
    std::size_t dropped = 0;
    for (double g : gaps) {
        if (g < 0.0)
            throw std::invalid_argument("fit_gaps: negative gap in input");
        if (g == 0.0)
            ++dropped;
        else
            positive.push_back(g);
    }
    return fit_sorted(positive, family, L, dropped, options);
}

FitReport fit_headways(const std::vector<double>& headways, Family family,
                       const FitOptions& options) {
    // with a single component the gap likelihood collapses to the
    // headway likelihood, so the same machinery applies
    return fit_gaps(headways, family, 1, options);
}

SelectionResult select_L(const std::vector<double>& gaps, Family family,
                         std::size_t L_min, std::size_t L_max,
                         const FitOptions& options) {
    if (L_min == 0 || L_max < L_min)
        throw std::invalid_argument("select_L: invalid L range");
    SelectionResult result;
    bool have_best = false;
    std::size_t best_index = 0;
    for (std::size_t L = L_min; L <= L_max; ++L) {
        try {
            result.table.push_back(fit_gaps(gaps, family, L, options));
        } catch (const std::exception& e) {
            FitReport failed;
            failed.family = family;
            failed.L = L;
            failed.max_loglik = kNegInf;
            failed.aic = std::numeric_limits<double>::infinity();
            failed.converged = false;
            failed.message = e.what();
            result.table.push_back(std::move(failed));
            continue;
        }
        const auto& r = result.table.back();
        if (!have_best || r.aic < result.table[best_index].aic) {
            have_best = true;
            best_index = result.table.size() - 1;
        }
    }
    if (!have_best)
        throw std::invalid_argument("select_L: every fit failed; first: " +
                                    result.table.front().message);
    result.best = result.table[best_index];
    return result;
}

SuperposedGapModel build_model_from_headway_fits(
    const std::vector<FitReport>& reports) {
    if (reports.empty())
        throw std::invalid_argument(
            "build_model_from_headway_fits: empty report list");
    std::vector<HeadwayModel> components;
    components.reserve(reports.size());
    for (const auto& r : reports) {
        if (r.L != 1)
            throw std::invalid_argument(
                "build_model_from_headway_fits: reports must have L = 1");
        components.push_back(
            HeadwayModel::from_params(r.family, r.estimates.at(0)));
    }
    return SuperposedGapModel(std::move(components));
}

}  // namespace gapflow
