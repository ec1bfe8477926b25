#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gapflow/simulation.hpp"
#include "oracle.hpp"

using namespace gapflow;

TEST_CASE("merged timeline is the sorted union of the lanes") {
    ArrivalTimeline t;
    t.lanes[1] = {0.5, 2.0, 3.5};
    t.lanes[2] = {1.0, 1.5, 4.0};
    const auto merged = t.merged_times();
    CHECK(merged == std::vector<double>{0.5, 1.0, 1.5, 2.0, 3.5, 4.0});
    CHECK(t.total_arrivals() == 6);
    t.validate();  // must not throw

    const auto single = ArrivalTimeline::merged({3.0, 1.0, 2.0});
    CHECK(single.merged_times() == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("validation names the offending lane and index") {
    ArrivalTimeline t;
    t.lanes[4] = {0.5, 2.0, 1.5};
    try {
        t.validate();
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("lane 4") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("gaps are successive differences of the merged stream") {
    ArrivalTimeline t;
    t.lanes[1] = {0.0, 1.0, 3.0};
    t.lanes[2] = {0.5, 3.0};
    const auto sample = gaps_from_arrivals(t);
    CHECK(sample.gaps == std::vector<double>{0.5, 0.5, 2.0, 0.0});
    CHECK(sample.n_arrivals == 5);
    CHECK(sample.n_zero == 1);  // the tie at t = 3.0
    CHECK(sample.duration == doctest::Approx(3.0));

    ArrivalTimeline lone;
    lone.lanes[1] = {1.0};
    CHECK_THROWS_AS(gaps_from_arrivals(lone), std::invalid_argument);
}

TEST_CASE("component streams are cumulative headway sums") {
    const auto m = HeadwayModel::gamma(2.0, 1.0);
    const auto times = simulate_component(m, 500.0, 42);
    REQUIRE(times.size() > 100);
    CHECK(std::is_sorted(times.begin(), times.end()));
    CHECK(times.back() <= 500.0);
    // increments are the i.i.d. headways: their empirical law must match
    std::vector<double> increments;
    increments.push_back(times[0]);
    for (std::size_t i = 1; i < times.size(); ++i)
        increments.push_back(times[i] - times[i - 1]);
    const double d = oracle::ks_distance(
        increments, [&m](double h) { return m.cdf(h); });
    CHECK(d < 1.36 / std::sqrt(static_cast<double>(increments.size())) * 1.5);
}

TEST_CASE("arrival counts obey the elementary renewal theorem") {
    const auto m = HeadwayModel::gamma(3.0, 1.5);  // mean 2 s
    const double horizon = 40000.0;
    const auto times = simulate_component(m, horizon, 9);
    const double rate = static_cast<double>(times.size()) / horizon;
    CHECK(rate == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("superposed gaps reproduce the analytical gap law") {
    const SuperposedGapModel model({HeadwayModel::gamma(2.741, 1.005),
                                    HeadwayModel::gamma(3.372, 1.945),
                                    HeadwayModel::gamma(4.096, 2.604)});
    const auto sample = simulate_superposed(model, 30000.0, 2024);
    REQUIRE(sample.gaps.size() > 20000);
    const double d = oracle::ks_distance(
        sample.gaps, [&model](double g) { return model.gap_cdf(g); });
    CHECK(d < 0.01);
    // mean gap converges to 1 / total flow
    const double mean = std::accumulate(sample.gaps.begin(),
                                        sample.gaps.end(), 0.0) /
                        static_cast<double>(sample.gaps.size());
    CHECK(mean == doctest::Approx(model.mean_gap()).epsilon(0.02));
}

TEST_CASE("warmup removes the transient start-up bias") {
    // all components start an interval at t = 0, so early gaps are not
    // stationary; the default warmup discards them
    const SuperposedGapModel model({HeadwayModel::gamma(8.0, 2.0),
                                    HeadwayModel::gamma(8.0, 2.0)});
    CHECK(default_warmup(model) == doctest::Approx(50.0 * 4.0));
    const auto with = simulate_superposed(model, 20000.0, 31);
    const auto without = simulate_superposed(model, 20000.0, 31, 0.0);
    CHECK(without.gaps.size() > with.gaps.size());
    const double d = oracle::ks_distance(
        with.gaps, [&model](double g) { return model.gap_cdf(g); });
    CHECK(d < 0.015);
}

TEST_CASE("seeding is deterministic and sensitive") {
    const SuperposedGapModel model({HeadwayModel::gamma(2.0, 1.0),
                                    HeadwayModel::exponential(0.5)});
    const auto a = simulate_superposed(model, 500.0, 99);
    const auto b = simulate_superposed(model, 500.0, 99);
    const auto c = simulate_superposed(model, 500.0, 100);
    CHECK(a.gaps == b.gaps);
    CHECK(a.gaps != c.gaps);
}

TEST_CASE("sub-seeds decorrelate the component streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    // identical components driven by one master seed still yield
    // distinct streams: were they correlated, the merged stream would
    // be riddled with tied crossing times
    const auto m = HeadwayModel::exponential(1.0);
    const auto s0 = simulate_component(m, 1000.0, derive_seed(7, 0));
    const auto s1 = simulate_component(m, 1000.0, derive_seed(7, 1));
    CHECK(s0 != s1);
    const SuperposedGapModel model({m, m});
    const auto sample = simulate_superposed(model, 1000.0, 7, 0.0);
    CHECK(sample.n_zero == 0);
}

TEST_CASE("poisson superposition gap rate equals the summed rate") {
    const SuperposedGapModel model({HeadwayModel::exponential(0.4),
                                    HeadwayModel::exponential(0.6)});
    const auto sample = simulate_superposed(model, 50000.0, 12345);
    const double mean = std::accumulate(sample.gaps.begin(),
                                        sample.gaps.end(), 0.0) /
                        static_cast<double>(sample.gaps.size());
    CHECK(mean == doctest::Approx(1.0).epsilon(0.02));
    const auto closed = exponential_gap_cdf({0.4, 0.6});
    const double d = oracle::ks_distance(sample.gaps, closed);
    CHECK(d < 0.01);
}
