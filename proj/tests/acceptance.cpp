// End-to-end acceptance checks.  Each criterion prints one line:
//   criterion NN: PASS|FAIL  <summary>
// and the process exits non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gapflow/diagnostics.hpp"
#include "gapflow/estimation.hpp"
#include "gapflow/simulation.hpp"
#include "gapflow/special.hpp"
#include "gapflow/superposition.hpp"
#include "oracle.hpp"

using namespace gapflow;

namespace {

int g_failures = 0;
int g_index = 0;

template <typename Fn>
void criterion(const std::string& title, Fn&& body) {
    ++g_index;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        std::ostringstream out;
        ok = body(out);
        detail = out.str();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!ok) ++g_failures;
    std::printf("criterion %02d: %s  %s (%s; %.1f s)\n", g_index,
                ok ? "PASS" : "FAIL", title.c_str(), detail.c_str(), sec);
    std::fflush(stdout);
}

SuperposedGapModel three_lane_model() {
    return SuperposedGapModel({HeadwayModel::gamma(2.741, 1.005),
                               HeadwayModel::gamma(3.372, 1.945),
                               HeadwayModel::gamma(4.096, 2.604)});
}

}  // namespace

int main() {
    criterion("exponential closure matches the general evaluator",
              [](std::ostringstream& out) {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::size_t> l_dist(1, 5);
        std::uniform_real_distribution<double> rate(0.1, 3.0);
        double worst = 0.0;
        for (int rep = 0; rep < 10; ++rep) {
            const std::size_t L = l_dist(rng);
            std::vector<double> rates;
            std::vector<HeadwayModel> components;
            for (std::size_t j = 0; j < L; ++j) {
                rates.push_back(rate(rng));
                components.push_back(HeadwayModel::exponential(rates.back()));
            }
            const SuperposedGapModel model(components);
            const auto closed = exponential_gap_cdf(rates);
            const double mean = model.mean_gap();
            for (int i = 0; i < 1000; ++i) {
                const double g = i * (10.0 * mean) / 999.0;
                worst = std::max(worst,
                                 std::abs(model.gap_cdf(g) - closed(g)));
            }
        }
        out << "sup |F_G - closed| = " << worst;
        return worst < 1e-9;
    });

    criterion("one million simulated gaps match the analytical gap cdf",
              [](std::ostringstream& out) {
        const auto model = three_lane_model();
        const double horizon = 1.02e6 * model.mean_gap() +
                               default_warmup(model);
        auto sample = simulate_superposed(model, horizon, 424242);
        if (sample.gaps.size() < 1000000) {
            out << "only " << sample.gaps.size() << " gaps";
            return false;
        }
        sample.gaps.resize(1000000);
        const double d = oracle::ks_distance(
            sample.gaps, [&model](double g) { return model.gap_cdf(g); });
        out << "KS = " << d << " on 1e6 gaps";
        return d < 0.005;
    });

    criterion("mean gap identity and the 0.63 s observed mean",
              [](std::ostringstream& out) {
        const SuperposedGapModel model({HeadwayModel::gamma(3.282, 3.343),
                                        HeadwayModel::gamma(0.501, 0.280)});
        const auto q = special::integrate(
            [&model](double g) { return 1.0 - model.gap_cdf(g); }, 0.0, 80.0,
            1e-10);
        const double rel =
            std::abs(q.value - model.mean_gap()) / model.mean_gap();
        out << "E[G] = " << q.value << ", 1/sum flow = " << model.mean_gap()
            << ", rel err = " << rel;
        return rel < 1e-4 && std::abs(q.value - 0.634) < 1e-3;
    });

    criterion("published alternative parameter sets are indistinguishable",
              [](std::ostringstream& out) {
        const SuperposedGapModel set1({HeadwayModel::gamma(1.5, 0.5),
                                       HeadwayModel::gamma(2.0, 0.8),
                                       HeadwayModel::gamma(2.6, 1.3),
                                       HeadwayModel::gamma(3.6, 0.1)});
        const SuperposedGapModel set2({HeadwayModel::gamma(1.3, 0.45),
                                       HeadwayModel::gamma(2.6, 1.05),
                                       HeadwayModel::gamma(2.26, 1.15)});
        double sup = 0.0;
        double at = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double g = i * 0.01;
            const double d = std::abs(set1.gap_pdf(g) - set2.gap_pdf(g));
            if (d > sup) {
                sup = d;
                at = g;
            }
        }
        out << "sup |f1 - f2| over [0,10] = " << sup << " at g = " << at;
        return sup < 0.01;
    });

    criterion("single-component parameters recovered at survey scale",
              [](std::ostringstream& out) {
        const SuperposedGapModel truth({HeadwayModel::gamma(0.820, 0.482)});
        const double horizon =
            6800.0 * truth.mean_gap() + default_warmup(truth);
        int hits = 0;
        for (int rep = 0; rep < 20; ++rep) {
            auto sample = simulate_superposed(
                truth, horizon, 1000 + static_cast<std::uint64_t>(rep));
            if (sample.gaps.size() < 6640) return false;
            sample.gaps.resize(6640);
            FitOptions options;
            options.seed = 10 + static_cast<std::uint64_t>(rep);
            const auto fit = fit_gaps(sample.gaps, Family::Gamma, 1, options);
            const bool ok =
                fit.converged &&
                std::abs(fit.estimates[0][0] - 0.820) <
                    3.0 * fit.std_errors[0][0] &&
                std::abs(fit.estimates[0][1] - 0.482) <
                    3.0 * fit.std_errors[0][1];
            if (ok) ++hits;
        }
        out << hits << "/20 replications within 3 se";
        return hits >= 19;
    });

    criterion("AIC selects one component on single-component data",
              [](std::ostringstream& out) {
        const SuperposedGapModel truth({HeadwayModel::gamma(0.820, 0.482)});
        const double horizon =
            6800.0 * truth.mean_gap() + default_warmup(truth);
        auto sample = simulate_superposed(truth, horizon, 9001);
        sample.gaps.resize(6640);
        FitOptions options;
        options.seed = 4;
        const auto selection =
            select_L(sample.gaps, Family::Gamma, 1, 5, options);
        double lo = selection.table[0].max_loglik;
        double hi = lo;
        for (const auto& row : selection.table) {
            if (!row.converged) {
                out << "L = " << row.L << " failed: " << row.message;
                return false;
            }
            lo = std::min(lo, row.max_loglik);
            hi = std::max(hi, row.max_loglik);
        }
        const double spread = (hi - lo) / std::abs(hi);
        out << "best L = " << selection.best.L
            << ", loglik spread = " << spread * 100.0 << "%";
        return selection.best.L == 1 && spread < 0.001;
    });

    criterion("superposed exponentials identify only the total rate",
              [](std::ostringstream& out) {
        const SuperposedGapModel truth({HeadwayModel::exponential(0.8),
                                        HeadwayModel::exponential(1.2)});
        auto sample = simulate_superposed(truth, 3000.0, 77);
        const auto fit = fit_gaps(sample.gaps, Family::Exponential, 2);
        const double total = fit.estimates[0][0] + fit.estimates[1][0];
        // the total-rate MLE has asymptotic standard error total/sqrt(n)
        const double se =
            total / std::sqrt(static_cast<double>(sample.gaps.size()));
        const bool unidentified =
            fit.rank_deficient &&
            (std::isnan(fit.t_values[0][0]) || std::isnan(fit.t_values[1][0]));
        out << "total rate " << total << " (true 2, se " << se
            << "), rank deficient = " << fit.rank_deficient;
        return std::abs(total - 2.0) < 3.0 * se && unidentified;
    });

    criterion("many superposed components approach a Poisson stream",
              [](std::ostringstream& out) {
        std::vector<HeadwayModel> components(20, HeadwayModel::gamma(4.0, 1.0));
        const SuperposedGapModel model(components);
        const auto expo =
            HeadwayModel::exponential(1.0 / model.mean_gap());
        double sup = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double g = i * (12.0 * model.mean_gap()) / 2000.0;
            sup = std::max(sup, std::abs(model.gap_cdf(g) - expo.cdf(g)));
        }
        out << "sup |F_G - F_exp| = " << sup;
        return sup < 0.02;
    });

    criterion("conditional-decomposition evaluator agrees with the library",
              [](std::ostringstream& out) {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<std::size_t> l_dist(1, 4);
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            const auto components =
                oracle::random_gamma_components(rng, l_dist(rng));
            const SuperposedGapModel model(components);
            for (double g : {0.1, 0.5, 1.0, 2.0, 4.0}) {
                worst = std::max(
                    worst, std::abs(model.gap_cdf(g) -
                                    oracle::gap_cdf(components, g)));
            }
        }
        out << "max deviation = " << worst;
        return worst < 1e-10;
    });

    criterion("renewal test: nominal size on renewal data, power on cycles",
              [](std::ostringstream& out) {
        std::mt19937_64 rng(401);
        const auto m = HeadwayModel::gamma(1.4, 2.0);
        int rejections = 0;
        for (int rep = 0; rep < 200; ++rep) {
            const auto gaps = sample_headways(m, 300, rng());
            if (renewal_test(gaps).reject) ++rejections;
        }
        const double rate = rejections / 200.0;
        bool alternating_rejected = true;
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<double> cyc;
            for (int i = 0; i < 100; ++i)
                cyc.push_back(i % 2 == 0 ? 0.1 + 0.01 * rep : 1.0);
            if (!renewal_test(cyc).reject) alternating_rejected = false;
        }
        out << "size = " << rate
            << ", alternating rejected = " << alternating_rejected;
        return rate >= 0.02 && rate <= 0.09 && alternating_rejected;
    });

    criterion("gap density normalizes and differentiates the gap cdf",
              [](std::ostringstream& out) {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<std::size_t> l_dist(1, 5);
        double worst_mass = 0.0;
        double worst_fd = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            const SuperposedGapModel model(
                oracle::random_gamma_components(rng, l_dist(rng)));
            const auto q = special::integrate(
                [&model](double g) { return model.gap_pdf(g); }, 0.0,
                40.0 * model.mean_gap(), 1e-9);
            worst_mass = std::max(worst_mass, std::abs(q.value - 1.0));
            const double h = 1e-5;
            for (double g = 0.05; g <= 8.0; g += 0.41) {
                const double fd =
                    (model.gap_cdf(g + h) - model.gap_cdf(g - h)) / (2.0 * h);
                worst_fd = std::max(worst_fd,
                                    std::abs(fd - model.gap_pdf(g)));
            }
        }
        out << "|mass - 1| <= " << worst_mass << ", fd error <= " << worst_fd;
        return worst_mass < 1e-6 && worst_fd < 1e-5;
    });

    if (g_failures == 0) {
        std::printf("all %d criteria passed\n", g_index);
    } else {
        std::printf("%d of %d criteria failed\n", g_failures, g_index);
    }
    return g_failures == 0 ? 0 : 1;
}
