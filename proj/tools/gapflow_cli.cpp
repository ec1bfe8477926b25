// gapflow command line: fit / simulate / diagnose gap distributions of
// superposed renewal arrival streams.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapflow/diagnostics.hpp"
#include "gapflow/estimation.hpp"
#include "gapflow/io.hpp"
#include "gapflow/simulation.hpp"

namespace {

using namespace gapflow;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct LRange {
    std::size_t lo = 1;
    std::size_t hi = 1;
};

LRange parse_l_range(const std::string& text) {
    LRange r;
    const auto sep = text.find("..");
    if (sep == std::string::npos) {
        r.lo = r.hi = std::stoul(text);
    } else {
        r.lo = std::stoul(text.substr(0, sep));
        r.hi = std::stoul(text.substr(sep + 2));
    }
    if (r.lo == 0 || r.hi < r.lo)
        throw CLI::ValidationError("--L-range", "expected N or N..M with M >= N >= 1");
    return r;
}

std::vector<double> parse_grid(const std::string& text) {
    // a:b:step
    const auto p1 = text.find(':');
    const auto p2 = text.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw CLI::ValidationError("--grid", "expected start:stop:step");
    const double a = std::stod(text.substr(0, p1));
    const double b = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
    const double step = std::stod(text.substr(p2 + 1));
    if (!(step > 0.0) || b < a)
        throw CLI::ValidationError("--grid", "need stop >= start and step > 0");
    std::vector<double> grid;
    for (double g = a; g <= b + 0.5 * step; g += step) grid.push_back(g);
    return grid;
}

void print_report(const FitReport& r) {
    std::printf("family=%s L=%zu n=%zu loglik=%.3f aic=%.3f converged=%s%s\n",
                family_name(r.family).c_str(), r.L, r.n_obs, r.max_loglik,
                r.aic, r.converged ? "yes" : "no",
                r.rank_deficient ? " (rank-deficient information matrix)" : "");
    const char* names[3][2] = {{"rate", ""}, {"shape", "rate"},
                               {"scale", "shape"}};
    const int fam = r.family == Family::Exponential ? 0
                    : r.family == Family::Gamma     ? 1
                                                    : 2;
    for (std::size_t j = 0; j < r.L; ++j) {
        std::printf("  component %zu:", j + 1);
        for (std::size_t q = 0; q < r.estimates[j].size(); ++q) {
            std::printf(" %s=%.3f (t=%.3f)", names[fam][q],
                        r.estimates[j][q], r.t_values[j][q]);
        }
        std::printf("\n");
    }
    if (!r.message.empty()) std::printf("  note: %s\n", r.message.c_str());
}

int cmd_gaps(const std::string& arrivals_path, const std::string& out,
             bool sort) {
    const auto timeline = io::read_arrivals(arrivals_path, sort);
    const auto sample = gaps_from_arrivals(timeline);
    io::write_gaps(out, sample.gaps);
    std::printf("%zu arrivals -> %zu gaps (%zu zero)\n", sample.n_arrivals,
                sample.gaps.size(), sample.n_zero);
    return kExitOk;
}

int cmd_fit(const std::string& gaps_path, const std::string& family_name_,
            const std::string& l_range, const std::string& out,
            const std::string& model_out, const FitOptions& options) {
    const auto gaps = io::read_gaps(gaps_path);
    const Family family = family_from_name(family_name_);
    const LRange range = parse_l_range(l_range);
    const auto selection = select_L(gaps, family, range.lo, range.hi, options);
    for (const auto& r : selection.table) {
        if (std::isfinite(r.aic)) {
            std::printf("L=%zu loglik=%.3f aic=%.3f\n", r.L, r.max_loglik,
                        r.aic);
        } else {
            std::printf("L=%zu failed: %s\n", r.L, r.message.c_str());
        }
    }
    std::printf("best: ");
    print_report(selection.best);
    if (!out.empty()) {
        if (range.lo == range.hi)
            io::write_file_text(out, io::fit_report_to_json(selection.best));
        else
            io::write_file_text(out, io::selection_to_json(selection));
    }
    if (!model_out.empty()) io::write_model(model_out, selection.best.to_model());
    return kExitOk;
}

int cmd_fit_headways(const std::string& headways_path,
                     const std::string& family_name_, const std::string& out,
                     const std::string& model_out, const FitOptions& options) {
    const auto headways = io::read_gaps(headways_path);
    const Family family = family_from_name(family_name_);
    const auto report = fit_headways(headways, family, options);
    print_report(report);
    if (!out.empty()) io::write_file_text(out, io::fit_report_to_json(report));
    if (!model_out.empty()) io::write_model(model_out, report.to_model());
    return kExitOk;
}

int cmd_eval(const std::string& model_path, const std::string& grid_spec,
             const std::string& out) {
    const auto model = io::read_model(model_path);
    const auto grid = parse_grid(grid_spec);
    io::write_grid(out, grid, model.gap_grid(grid));
    std::printf("wrote %zu grid rows (mean gap %.3f s)\n", grid.size(),
                model.mean_gap());
    return kExitOk;
}

int cmd_simulate(const std::string& model_path, double horizon,
                 std::uint64_t seed, double warmup, const std::string& out,
                 const std::string& gaps_out) {
    const auto model = io::read_model(model_path);
    ArrivalTimeline timeline;
    for (std::size_t j = 0; j < model.size(); ++j) {
        timeline.lanes[static_cast<int>(j) + 1] = simulate_component(
            model.component(j), horizon, derive_seed(seed, 0x9e3779b9 + j));
    }
    if (!out.empty()) io::write_arrivals(out, timeline);
    if (!gaps_out.empty()) {
        const auto sample = simulate_superposed(model, horizon, seed, warmup);
        io::write_gaps(gaps_out, sample.gaps);
        std::printf("wrote %zu gaps after warmup\n", sample.gaps.size());
    }
    std::printf("simulated %zu arrivals over %.1f s\n",
                timeline.total_arrivals(), horizon);
    return kExitOk;
}

int cmd_renewal_test(const std::string& gaps_path, double alpha) {
    const auto gaps = io::read_gaps(gaps_path);
    const auto result = renewal_test(gaps, alpha);
    std::printf("method: %s\n", result.method.c_str());
    std::printf("n=%zu z=%.3f p=%.4f -> %s renewal hypothesis at alpha=%.3g\n",
                result.n, result.statistic, result.p_value,
                result.reject ? "REJECT" : "do not reject", result.alpha);
    return kExitOk;
}

int cmd_gof(const std::string& gaps_path, const std::string& model_path) {
    const auto gaps = io::read_gaps(gaps_path);
    const auto model = io::read_model(model_path);
    const auto result = ks_gof(gaps, model);
    std::printf("KS statistic=%.4f p=%.4g n=%zu\n", result.ks_statistic,
                result.p_value, result.n);
    return kExitOk;
}

int cmd_density(const std::string& gaps_path, const std::string& model_path,
                std::size_t bins, double g_max, const std::string& out) {
    const auto gaps = io::read_gaps(gaps_path);
    const auto model = io::read_model(model_path);
    const auto table = density_table(gaps, model, bins, g_max);
    io::write_density(out, table);
    std::printf("wrote %zu bins (%.1f%% of mass beyond g_max)\n",
                table.rows.size(), 100.0 * table.mass_beyond_gmax);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gap distributions of superposed renewal traffic streams"};
    app.require_subcommand(1);

    std::string arrivals_path, gaps_path, headways_path, model_path;
    std::string out, model_out, family = "gamma", l_range = "1", grid_spec;
    std::string gaps_out;
    bool sort_arrivals = false;
    double horizon = 3600.0, warmup = -1.0, alpha = 0.05, g_max = 10.0;
    std::uint64_t seed = 1;
    std::size_t bins = 60;
    FitOptions options;

    auto* gaps_cmd = app.add_subcommand("gaps", "extract gaps from arrivals");
    gaps_cmd->add_option("--arrivals", arrivals_path, "arrival CSV")
        ->required();
    gaps_cmd->add_option("--out", out, "gap CSV output")->required();
    gaps_cmd->add_flag("--sort", sort_arrivals,
                       "sort lane times instead of rejecting");

    auto* fit_cmd = app.add_subcommand("fit", "fit a gap model by MLE");
    fit_cmd->add_option("--gaps", gaps_path, "gap CSV")->required();
    fit_cmd->add_option("--family", family,
                        "exponential | gamma | loglogistic");
    fit_cmd->add_option("--L-range", l_range, "N or N..M components");
    fit_cmd->add_option("--out", out, "report JSON output");
    fit_cmd->add_option("--model-out", model_out, "best model JSON output");
    fit_cmd->add_option("--seed", options.seed, "multi-start seed");
    fit_cmd->add_option("--starts", options.n_starts, "number of starts");

    auto* fith_cmd =
        app.add_subcommand("fit-headways", "fit one lane headway model");
    fith_cmd->add_option("--headways", headways_path, "headway CSV (gap_s)")
        ->required();
    fith_cmd->add_option("--family", family,
                         "exponential | gamma | loglogistic");
    fith_cmd->add_option("--out", out, "report JSON output");
    fith_cmd->add_option("--model-out", model_out, "model JSON output");
    fith_cmd->add_option("--seed", options.seed, "multi-start seed");

    auto* eval_cmd = app.add_subcommand("eval", "tabulate model cdf/pdf");
    eval_cmd->add_option("--model", model_path, "model JSON")->required();
    eval_cmd->add_option("--grid", grid_spec, "start:stop:step")->required();
    eval_cmd->add_option("--out", out, "grid CSV output")->required();

    auto* sim_cmd = app.add_subcommand("simulate", "generate arrival streams");
    sim_cmd->add_option("--model", model_path, "model JSON")->required();
    sim_cmd->add_option("--horizon", horizon, "simulated seconds");
    sim_cmd->add_option("--seed", seed, "master seed");
    sim_cmd->add_option("--warmup", warmup,
                        "discarded leading seconds (default 50*max mean)");
    sim_cmd->add_option("--out", out, "arrival CSV output");
    sim_cmd->add_option("--gaps-out", gaps_out,
                        "also write post-warmup gap CSV");

    auto* rt_cmd =
        app.add_subcommand("renewal-test", "interval independence check");
    rt_cmd->add_option("--gaps", gaps_path, "gap CSV")->required();
    rt_cmd->add_option("--alpha", alpha, "significance level");

    auto* gof_cmd = app.add_subcommand("gof", "KS goodness of fit");
    gof_cmd->add_option("--gaps", gaps_path, "gap CSV")->required();
    gof_cmd->add_option("--model", model_path, "model JSON")->required();

    auto* den_cmd =
        app.add_subcommand("density", "histogram vs model pdf table");
    den_cmd->add_option("--gaps", gaps_path, "gap CSV")->required();
    den_cmd->add_option("--model", model_path, "model JSON")->required();
    den_cmd->add_option("--bins", bins, "histogram bins");
    den_cmd->add_option("--gmax", g_max, "histogram upper edge, seconds");
    den_cmd->add_option("--out", out, "density CSV output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gaps_cmd->parsed()) return cmd_gaps(arrivals_path, out, sort_arrivals);
        if (fit_cmd->parsed())
            return cmd_fit(gaps_path, family, l_range, out, model_out, options);
        if (fith_cmd->parsed())
            return cmd_fit_headways(headways_path, family, out, model_out,
                                    options);
        if (eval_cmd->parsed()) return cmd_eval(model_path, grid_spec, out);
        if (sim_cmd->parsed())
            return cmd_simulate(model_path, horizon, seed, warmup, out,
                                gaps_out);
        if (rt_cmd->parsed()) return cmd_renewal_test(gaps_path, alpha);
        if (gof_cmd->parsed()) return cmd_gof(gaps_path, model_path);
        if (den_cmd->parsed())
            return cmd_density(gaps_path, model_path, bins, g_max, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gapflow::io::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
