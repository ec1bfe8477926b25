#ifndef GAPFLOW_SIMULATION_HPP_
#define GAPFLOW_SIMULATION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapflow/superposition.hpp"

namespace gapflow {

// Crossing times observed at a road section, either split per lane
// (orderly streams) or as one merged stream (disorderly streams).
struct ArrivalTimeline {
    // lane id -> strictly increasing crossing times (seconds)
    std::map<int, std::vector<double>> lanes;

    static ArrivalTimeline merged(std::vector<double> times);

    // sorted union of all lane times
    std::vector<double> merged_times() const;
    std::size_t total_arrivals() const;

    // throws std::invalid_argument naming lane and index on a
    // non-monotone sequence
    void validate() const;
};

struct GapSample {
    std::vector<double> gaps;  // g_1 .. g_S, successive differences
    std::string source;
    double duration = 0.0;     // span of the merged timeline, seconds
    std::size_t n_arrivals = 0;
    std::size_t n_zero = 0;    // tied crossing times kept as zero gaps
};

// Successive differences of the merged, sorted crossing times.
GapSample gaps_from_arrivals(const ArrivalTimeline& timeline);

// Cumulative sums of i.i.d. headway draws, truncated at the horizon.
std::vector<double> simulate_component(const HeadwayModel& model,
                                       double horizon, std::uint64_t seed);

// Generate every component stream, merge, and extract gaps; gaps that
// end at or before the warmup time are discarded so the residual
// processes are sampled in their stationary regime.  Negative warmup
// selects the default 50 * max_j mu_j.
GapSample simulate_superposed(const SuperposedGapModel& model, double horizon,
                              std::uint64_t seed, double warmup = -1.0);

// Default warmup used by simulate_superposed.
double default_warmup(const SuperposedGapModel& model);

// Independent sub-seed stream: splitmix64 finalizer over master and index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace gapflow

#endif  // GAPFLOW_SIMULATION_HPP_
