#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "iqmodel/errors.hpp"
#include "iqmodel/multi_type.hpp"
#include "iqmodel/oracle_sim.hpp"
#include "iqmodel/single_type.hpp"
#include "iqmodel/solver.hpp"
#include "reference_data.hpp"

using iqm::make_poisson_config;
using iqm::ModelConfig;
using iqm::OccupancyState;
using iqm::SimConfig;
using iqm::SplitMix64;
using iqm::StateSpace;

TEST_SUITE("oracle_sim") {

TEST_CASE("splitmix64 reproduces the published stream") {
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xE220A8397B1DCDAFULL);
    CHECK(zero.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(zero.next() == 0x06C45D188009454FULL);
    SplitMix64 other(42);
    CHECK(other.next() == 0xBDD732262FEB6E95ULL);
    CHECK(other.next() == 0x28EFE333B266F103ULL);
    const double u = SplitMix64(7).next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}

TEST_CASE("issue substep is a no-op on the empty state") {
    const ModelConfig config = make_poisson_config(3, {1.5, 1.0}, {0.75, 0.8}, {2, 1});
    SplitMix64 rng(1);
    CHECK(iqm::issue_substep({0, 0}, config, rng) == OccupancyState{0, 0});
}

TEST_CASE("substeps respect capacity and FU limits") {
    const ModelConfig config = make_poisson_config(4, {2.0, 1.0}, {0.7, 0.4}, {2, 1});
    SplitMix64 rng(99);
    OccupancyState state{0, 0};
    for (int cycle = 0; cycle < 20'000; ++cycle) {
        const OccupancyState drained = iqm::issue_substep(state, config, rng);
        for (std::size_t t = 0; t < 2; ++t) {
            CHECK(drained[t] >= 0);
            CHECK(drained[t] <= state[t]);
            CHECK(state[t] - drained[t] <= config.types[t].fu_count);
        }
        const OccupancyState filled = iqm::dispatch_substep(drained, config, rng);
        int total = 0;
        for (std::size_t t = 0; t < 2; ++t) {
            CHECK(filled[t] >= drained[t]);
            total += filled[t];
        }
        CHECK(total <= config.capacity);
        state = filled;
    }
}

TEST_CASE("single-type step outcomes match the transition row from full occupancy") {
    const ModelConfig config = make_poisson_config(3, {1.0}, {0.6}, {2});
    // row of P out of state 3, frozen from the matrix product
    const std::vector<double> expected{0.0, 0.238385878, 0.344335157, 0.417278965};
    SplitMix64 rng(2024);
    std::vector<double> freq(4, 0.0);
    const int trials = 1'000'000;
    for (int trial = 0; trial < trials; ++trial) {
        freq[static_cast<std::size_t>(iqm::step({3}, config, rng)[0])] += 1.0;
    }
    for (double& f : freq) f /= trials;
    CHECK(iqm::tv_distance(freq, expected) < 0.005);
}

TEST_CASE("two-type step outcomes match the transition rows") {
    const ModelConfig config = make_poisson_config(3, {1.5, 1.0}, {0.75, 0.8}, {2, 1});
    const StateSpace space = StateSpace::enumerate(2, 3);
    const auto p = iqm::complete_matrix(iqm::joint_consumption_matrix(config, space),
                                        iqm::joint_arrival_matrix(config, space));
    SplitMix64 rng(7);
    const int trials = 1'000'000;
    for (const OccupancyState& start : {OccupancyState{0, 0}, OccupancyState{1, 1},
                                        OccupancyState{3, 0}}) {
        std::vector<double> freq(space.size(), 0.0);
        for (int trial = 0; trial < trials; ++trial) {
            freq[space.index_of(iqm::step(start, config, rng))] += 1.0;
        }
        for (double& f : freq) f /= trials;
        std::vector<double> row(space.size());
        const std::size_t i = space.index_of(start);
        for (std::size_t j = 0; j < space.size(); ++j) row[j] = p(i, j);
        CHECK_MESSAGE(iqm::tv_distance(freq, row) < 0.005, "start <", start[0], ",", start[1], ">");
    }
}

TEST_CASE("long run visits match the stationary distribution (single type)") {
    SimConfig sim;
    sim.model = make_poisson_config(3, {1.0}, {0.6}, {2});
    sim.cycles = 1'000'000;
    sim.warmup = 1'000;
    sim.seed = 31337;
    const iqm::SimReport report = iqm::run(sim);

    const auto analytic = iqm::solve_model(sim.model);
    CHECK(iqm::tv_distance(report.empirical_pi, analytic.pi) <= 0.01);

    double total = std::accumulate(report.empirical_pi.begin(), report.empirical_pi.end(), 0.0);
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(report.generator == "splitmix64");
    CHECK(report.cycles == 1'000'000);
}

TEST_CASE("long run queue lengths match the two-type model") {
    SimConfig sim;
    sim.model = make_poisson_config(3, {1.5, 1.0}, {0.75, 0.8}, {2, 1});
    sim.cycles = 1'000'000;
    sim.warmup = 1'000;
    sim.seed = 4242;
    const iqm::SimReport report = iqm::run(sim);
    CHECK(std::abs(report.empirical_queue_length[0] - refdata::kTwoTypeL1Exact) < 0.01);
    CHECK(std::abs(report.empirical_queue_length[1] - refdata::kTwoTypeL2Exact) < 0.01);
    CHECK(std::abs(report.empirical_total_queue_length -
                   (report.empirical_queue_length[0] + report.empirical_queue_length[1])) < 1e-12);
}

TEST_CASE("a single tallied cycle gives a point mass") {
    SimConfig sim;
    sim.model = make_poisson_config(3, {1.0}, {0.6}, {2});
    sim.cycles = 11;
    sim.warmup = 10;
    sim.seed = 5;
    const iqm::SimReport report = iqm::run(sim);
    int ones = 0;
    for (double v : report.empirical_pi) {
        CHECK((v == 0.0 || v == 1.0));
        if (v == 1.0) ++ones;
    }
    CHECK(ones == 1);
}

TEST_CASE("identical configs give identical reports") {
    SimConfig sim;
    sim.model = make_poisson_config(3, {1.5, 1.0}, {0.75, 0.8}, {2, 1});
    sim.cycles = 50'000;
    sim.warmup = 500;
    sim.seed = 777;
    const iqm::SimReport a = iqm::run(sim);
    const iqm::SimReport b = iqm::run(sim);
    CHECK(a.empirical_pi == b.empirical_pi);
    CHECK(a.empirical_queue_length == b.empirical_queue_length);
    CHECK(a.empirical_total_queue_length == b.empirical_total_queue_length);

    sim.seed = 778;
    const iqm::SimReport c = iqm::run(sim);
    CHECK(a.empirical_pi != c.empirical_pi);
}

TEST_CASE("sim config validation") {
    SimConfig sim;
    sim.model = make_poisson_config(3, {1.0}, {0.6}, {2});
    sim.cycles = 100;
    sim.warmup = 100;
    CHECK_THROWS_AS(sim.validate(), iqm::DomainError);
    sim.warmup = -1;
    CHECK_THROWS_AS(sim.validate(), iqm::DomainError);
    sim.warmup = 99;
    CHECK_NOTHROW(sim.validate());
}

TEST_CASE("tv distance") {
    const std::vector<double> p{0.5, 0.5};
    const std::vector<double> q{0.75, 0.25};
    CHECK(iqm::tv_distance(p, q) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(iqm::tv_distance(p, p) == 0.0);
    const std::vector<double> r{1.0};
    CHECK_THROWS_AS(iqm::tv_distance(p, r), iqm::DimensionMismatch);
}

}  // TEST_SUITE
