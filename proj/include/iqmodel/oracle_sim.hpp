#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iqmodel/model_config.hpp"
#include "iqmodel/state_space.hpp"

namespace iqm {

// SplitMix64 (Steele / Vigna). Chosen for reproducibility: integer-only state
// transitions give bit-identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

struct SimConfig {
    ModelConfig model;
    long long cycles = 1'000'000;
    long long warmup = 1'000;
    std::uint64_t seed = 0;

    void validate() const;  // DomainError unless cycles > warmup >= 0
};

struct SimReport {
    std::vector<double> empirical_pi;             // post-dispatch visit frequencies
    std::vector<double> empirical_queue_length;   // per type
    double empirical_total_queue_length = 0.0;
    std::uint64_t seed = 0;
    std::string generator;                        // "splitmix64"
    long long cycles = 0;
    long long warmup = 0;
    std::optional<double> tv_distance;            // vs. an analytic pi, when compared
};

// Issue substep: per type, draw the number of ready instructions as
// Binomial(n_t, rho_t) and remove min(ready, F_t).
OccupancyState issue_substep(const OccupancyState& state, const ModelConfig& config,
                             SplitMix64& rng);

// Dispatch substep: draw per-type arrival counts independently. If the queue
// would stay strictly below capacity, add them all; otherwise the cycle is an
// overflow event and the remaining free slots are refilled one by one with
// i.i.d. type draws weighted by the incoming type probabilities. Landing
// exactly on capacity counts as overflow, matching the analytic boundary
// treatment.
OccupancyState dispatch_substep(const OccupancyState& state, const ModelConfig& config,
                                SplitMix64& rng);

// One full cycle: issue, then dispatch.
OccupancyState step(const OccupancyState& state, const ModelConfig& config, SplitMix64& rng);

// Runs the chain from the empty state, tallying post-dispatch states after
// the warmup period. Deterministic for a fixed SimConfig.
SimReport run(const SimConfig& sim);

// Half the L1 distance between two probability vectors.
double tv_distance(std::span<const double> p, std::span<const double> q);

}  // namespace iqm
