#include "gapflow/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gapflow {

ArrivalTimeline ArrivalTimeline::merged(std::vector<double> times) {
    ArrivalTimeline t;
    t.lanes[0] = std::move(times);
    return t;
}

std::vector<double> ArrivalTimeline::merged_times() const {
    std::vector<double> all;
    all.reserve(total_arrivals());
    for (const auto& [lane, times] : lanes)
        all.insert(all.end(), times.begin(), times.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::size_t ArrivalTimeline::total_arrivals() const {
    std::size_t n = 0;
    for (const auto& [lane, times] : lanes) n += times.size();
    return n;
}

void ArrivalTimeline::validate() const {
    for (const auto& [lane, times] : lanes) {
        for (std::size_t i = 1; i < times.size(); ++i) {
            if (!(times[i] > times[i - 1]))
                throw std::invalid_argument(
                    "non-increasing crossing time in lane " +
                    std::to_string(lane) + " at index " + std::to_string(i));
        }
    }
}

GapSample gaps_from_arrivals(const ArrivalTimeline& timeline) {
    timeline.validate();
    const auto merged = timeline.merged_times();
    if (merged.size() < 2)
        throw std::invalid_argument(
            "gaps_from_arrivals: need at least 2 arrivals");
    GapSample sample;
    sample.n_arrivals = merged.size();
    sample.duration = merged.back() - merged.front();
    sample.gaps.reserve(merged.size() - 1);
    for (std::size_t i = 1; i < merged.size(); ++i) {
        const double g = merged[i] - merged[i - 1];
        if (g == 0.0) ++sample.n_zero;
        sample.gaps.push_back(g);
    }
    return sample;
}

std::vector<double> simulate_component(const HeadwayModel& model,
                                       double horizon, std::uint64_t seed) {
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_component: horizon must be > 0");
    // draw in blocks sized from the expected count
    std::vector<double> arrivals;
    arrivals.reserve(static_cast<std::size_t>(horizon / model.mean() * 1.1) +
                     16);
    double t = 0.0;
    std::uint64_t block = 0;
    const std::size_t block_size =
        std::max<std::size_t>(1024, static_cast<std::size_t>(
                                        horizon / model.mean() * 1.05));
    while (t <= horizon) {
        const auto headways =
            sample_headways(model, block_size, derive_seed(seed, block++));
        for (double h : headways) {
            t += h;
            if (t > horizon) break;
            arrivals.push_back(t);
        }
    }
    return arrivals;
}

double default_warmup(const SuperposedGapModel& model) {
    double max_mu = 0.0;
    for (const auto& c : model.components()) max_mu = std::max(max_mu, c.mean());
    return 50.0 * max_mu;
}

GapSample simulate_superposed(const SuperposedGapModel& model, double horizon,
                              std::uint64_t seed, double warmup) {
    if (warmup < 0.0) warmup = default_warmup(model);
    if (!(horizon > warmup))
        throw std::invalid_argument(
            "simulate_superposed: horizon must exceed warmup");
    ArrivalTimeline timeline;
    for (std::size_t j = 0; j < model.size(); ++j) {
        timeline.lanes[static_cast<int>(j) + 1] = simulate_component(
            model.component(j), horizon, derive_seed(seed, 0x9e3779b9 + j));
    }
    const auto merged = timeline.merged_times();
    GapSample sample;
    sample.n_arrivals = merged.size();
    sample.duration = merged.empty() ? 0.0 : merged.back() - merged.front();
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i] <= warmup) continue;  // gap ends inside warmup
        const double g = merged[i] - merged[i - 1];
        if (g == 0.0) ++sample.n_zero;
        sample.gaps.push_back(g);
    }
    sample.source = "simulated";
    return sample;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace gapflow
