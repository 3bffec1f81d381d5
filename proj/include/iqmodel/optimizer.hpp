#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iqmodel/model_config.hpp"

namespace iqm {

// Search bounds and per-type FU unit costs for the configuration search.
struct FuCostParams {
    std::vector<double> unit_cost;
    std::vector<int> fu_min;
    std::vector<int> fu_max;
    int evaluation_cap = 4096;  // solver calls allowed per search

    // unit_cost taken from the config's types; bounds [1, 8] everywhere.
    static FuCostParams defaults(const ModelConfig& config);

    void validate(int type_count) const;
};

struct SurfacePoint {
    std::vector<int> fu;
    std::vector<double> queue_length;  // L_t under this configuration
    double cost = 0.0;
};

struct OptimizationResult {
    std::vector<int> best_fu;
    double best_cost = 0.0;
    std::vector<SurfacePoint> surface;  // every evaluated configuration, in evaluation order
    int evaluations = 0;
};

// Total cost of the config's FU counts: sum_t (L_t + unit_cost[t] * fu[t]),
// with the L_t coming from a full analytic solve.
double configuration_cost(const ModelConfig& config, const FuCostParams& costs);

// Greedy local search from one FU of each type (clamped into bounds), moving
// to the strictly cheapest +-1 neighbor until none improves. Ties break
// toward the lexicographically smallest configuration.
OptimizationResult hill_climb(const ModelConfig& config, const FuCostParams& costs);

// Exhaustive evaluation of the bounded grid in lexicographic order. Throws
// EvaluationCapExceeded if the grid has more points than the cap.
OptimizationResult grid_search(const ModelConfig& config, const FuCostParams& costs);

// The cost surface is expected to be convex, which makes the greedy search
// exact; when both searches ran, a gap between their optima is reported
// rather than hidden.
std::optional<std::string> convexity_violation(const OptimizationResult& climbed,
                                               const OptimizationResult& exhaustive);

}  // namespace iqm
