#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iqmodel/model_config.hpp"
#include "iqmodel/state_space.hpp"
#include "iqmodel/transition_matrix.hpp"

namespace iqm {

struct SteadyStateOptions {
    double residual_tol = 1e-10;   // max|pi P - pi| required of an accepted solve
    double stall_tol = 1e-13;      // L1 change below this counts as a fixed point
    long long max_iterations = 1'000'000;
};

struct SteadyStateSolution {
    std::vector<double> pi;
    long long iterations = 0;
    double residual = 0.0;
    // False when the chain has more than one closed communicating class; the
    // returned vector is then just the limit from the uniform start.
    bool unique = true;
};

// Left fixed point pi P = pi via power iteration from the uniform vector.
// Deterministic: fixed iteration schedule and summation order. Throws
// NoConvergence at the iteration cap (periodic chains, in practice).
SteadyStateSolution steady_state(const TransitionMatrix& complete,
                                 const SteadyStateOptions& options = {});

struct SteadyStateReport {
    std::vector<double> pi;
    std::vector<double> queue_length;   // L_t, expected type-t instructions in the IQ
    double total_queue_length = 0.0;    // L
    std::vector<double> flow_ratio;     // R_t = mu_t / L_t; NaN when L_t = 0
    double p_full = 0.0;                // stationary probability of a full IQ
    long long iterations = 0;
    double residual = 0.0;
    std::vector<std::string> warnings;  // NonUniqueSteadyState, FlowRatioUndefined:<name>
};

// Derives every report metric from a stationary vector. Queue lengths sum
// over states in ascending index order, so results are reproducible.
SteadyStateReport metrics(const std::vector<double>& pi, const StateSpace& space,
                          const ModelConfig& config);

// Full analytic pipeline: state space, joint matrices, P = C x A, steady
// state, metrics.
SteadyStateReport solve_model(const ModelConfig& config,
                              std::uint64_t max_states = kDefaultStateCeiling,
                              const SteadyStateOptions& options = {});

}  // namespace iqm
