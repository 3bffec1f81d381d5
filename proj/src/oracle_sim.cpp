#include "iqmodel/oracle_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iqmodel/errors.hpp"

namespace iqm {

void SimConfig::validate() const {
    model.validate();
    if (warmup < 0) {
        throw DomainError("sim config: warmup must be >= 0");
    }
    if (cycles <= warmup) {
        throw DomainError("sim config: cycles (" + std::to_string(cycles) +
                          ") must exceed warmup (" + std::to_string(warmup) + ")");
    }
}

namespace {

// Inverse-transform draw from an arrival pmf. Counts above `cap` are all
// equivalent downstream (they overflow the IQ no matter what the other types
// drew), so the whole tail maps to cap+1 and no truncation error enters.
int sample_arrival(const ArrivalDist& dist, int cap, SplitMix64& rng) {
    const double u = rng.next_unit();
    double cumulative = 0.0;
    for (int k = 0; k <= cap; ++k) {
        cumulative += dist.pmf(k);
        if (u < cumulative) {
            return k;
        }
    }
    return cap + 1;
}

int sample_type(const std::vector<double>& type_prob, SplitMix64& rng) {
    const double u = rng.next_unit();
    double cumulative = 0.0;
    for (std::size_t t = 0; t + 1 < type_prob.size(); ++t) {
        cumulative += type_prob[t];
        if (u < cumulative) {
            return static_cast<int>(t);
        }
    }
    return static_cast<int>(type_prob.size()) - 1;
}

}  // namespace

OccupancyState issue_substep(const OccupancyState& state, const ModelConfig& config,
                             SplitMix64& rng) {
    OccupancyState out = state;
    for (std::size_t t = 0; t < out.size(); ++t) {
        const double rho = config.types[t].rho;
        int ready = 0;
        for (int i = 0; i < state[t]; ++i) {
            if (rng.next_unit() < rho) {
                ++ready;
            }
        }
        out[t] -= std::min(ready, config.types[t].fu_count);
    }
    return out;
}

OccupancyState dispatch_substep(const OccupancyState& state, const ModelConfig& config,
                                SplitMix64& rng) {
    const int N = config.capacity;
    const int occupied = std::accumulate(state.begin(), state.end(), 0);

    std::vector<int> draws(state.size());
    int drawn_total = 0;
    for (std::size_t t = 0; t < state.size(); ++t) {
        draws[t] = sample_arrival(*config.types[t].arrival, N, rng);
        drawn_total += draws[t];
    }

    OccupancyState out = state;
    if (occupied + drawn_total < N) {
        for (std::size_t t = 0; t < out.size(); ++t) {
            out[t] += draws[t];
        }
        return out;
    }

    // Overflow event: filling up exactly counts too. The free slots are
    // claimed one at a time by the incoming instruction mix.
    std::vector<double> type_prob(state.size());
    for (std::size_t t = 0; t < state.size(); ++t) {
        type_prob[t] = type_probability(config, static_cast<int>(t));
    }
    for (int slot = 0; slot < N - occupied; ++slot) {
        ++out[static_cast<std::size_t>(sample_type(type_prob, rng))];
    }
    return out;
}

OccupancyState step(const OccupancyState& state, const ModelConfig& config, SplitMix64& rng) {
    return dispatch_substep(issue_substep(state, config, rng), config, rng);
}

SimReport run(const SimConfig& sim) {
    sim.validate();
    const ModelConfig& model = sim.model;
    const StateSpace space = StateSpace::enumerate(model.type_count(), model.capacity);

    SplitMix64 rng(sim.seed);
    OccupancyState state(static_cast<std::size_t>(model.type_count()), 0);
    std::vector<std::uint64_t> visits(space.size(), 0);

    for (long long cycle = 0; cycle < sim.cycles; ++cycle) {
        state = step(state, model, rng);
        if (cycle >= sim.warmup) {
            ++visits[space.index_of(state)];
        }
    }

    const double samples = static_cast<double>(sim.cycles - sim.warmup);
    SimReport report;
    report.empirical_pi.resize(space.size());
    for (std::size_t k = 0; k < space.size(); ++k) {
        report.empirical_pi[k] = static_cast<double>(visits[k]) / samples;
    }
    report.empirical_queue_length.assign(static_cast<std::size_t>(model.type_count()), 0.0);
    for (std::size_t k = 0; k < space.size(); ++k) {
        if (visits[k] == 0) continue;
        for (int t = 0; t < model.type_count(); ++t) {
            report.empirical_queue_length[static_cast<std::size_t>(t)] +=
                static_cast<double>(space[k][static_cast<std::size_t>(t)]) * report.empirical_pi[k];
        }
    }
    for (double l : report.empirical_queue_length) {
        report.empirical_total_queue_length += l;
    }
    report.seed = sim.seed;
    report.generator = "splitmix64";
    report.cycles = sim.cycles;
    report.warmup = sim.warmup;
    return report;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DimensionMismatch("tv_distance: vectors have different lengths");
    }
    double l1 = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        l1 += std::abs(p[k] - q[k]);
    }
    return 0.5 * l1;
}

}  // namespace iqm
