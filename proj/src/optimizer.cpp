#include "iqmodel/optimizer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "iqmodel/errors.hpp"
#include "iqmodel/solver.hpp"

namespace iqm {

FuCostParams FuCostParams::defaults(const ModelConfig& config) {
    FuCostParams params;
    const auto T = static_cast<std::size_t>(config.type_count());
    params.unit_cost.reserve(T);
    for (const auto& type : config.types) {
        params.unit_cost.push_back(type.unit_cost);
    }
    params.fu_min.assign(T, 1);
    params.fu_max.assign(T, 8);
    return params;
}

void FuCostParams::validate(int type_count) const {
    const auto T = static_cast<std::size_t>(type_count);
    if (unit_cost.size() != T || fu_min.size() != T || fu_max.size() != T) {
        throw DomainError("fu cost params: per-type vectors must have length " +
                          std::to_string(type_count));
    }
    for (std::size_t t = 0; t < T; ++t) {
        if (unit_cost[t] < 0.0) {
            throw DomainError("fu cost params: unit cost must be >= 0");
        }
        if (fu_min[t] < 1 || fu_max[t] < fu_min[t]) {
            throw DomainError("fu cost params: need 1 <= fu_min <= fu_max per type");
        }
    }
    if (evaluation_cap < 1) {
        throw DomainError("fu cost params: evaluation cap must be >= 1");
    }
}

namespace {

// Caches full solves per FU configuration so a search never pays twice for
// the same point, and re-evaluations stay bitwise identical.
class CostEvaluator {
public:
    CostEvaluator(const ModelConfig& base, const FuCostParams& costs)
        : base_(base), costs_(costs) {}

    const SurfacePoint& evaluate(const std::vector<int>& fu) {
        auto it = cache_.find(fu);
        if (it != cache_.end()) {
            return it->second;
        }
        if (evaluations_ >= costs_.evaluation_cap) {
            throw EvaluationCapExceeded("configuration search exceeded " +
                                        std::to_string(costs_.evaluation_cap) + " solver calls");
        }
        ++evaluations_;

        ModelConfig candidate = base_;
        for (std::size_t t = 0; t < fu.size(); ++t) {
            candidate.types[t].fu_count = fu[t];
        }
        const SteadyStateReport report = solve_model(candidate);

        SurfacePoint point;
        point.fu = fu;
        point.queue_length = report.queue_length;
        point.cost = 0.0;
        for (std::size_t t = 0; t < fu.size(); ++t) {
            point.cost += report.queue_length[t] + costs_.unit_cost[t] * static_cast<double>(fu[t]);
        }
        auto [pos, inserted] = cache_.emplace(fu, std::move(point));
        order_.push_back(&pos->second);
        return pos->second;
    }

    int evaluations() const { return evaluations_; }

    std::vector<SurfacePoint> visited() const {
        std::vector<SurfacePoint> out;
        out.reserve(order_.size());
        for (const SurfacePoint* p : order_) {
            out.push_back(*p);
        }
        return out;
    }

private:
    const ModelConfig& base_;
    const FuCostParams& costs_;
    std::map<std::vector<int>, SurfacePoint> cache_;
    std::vector<const SurfacePoint*> order_;
    int evaluations_ = 0;
};

std::string fu_to_string(const std::vector<int>& fu) {
    std::string s = "[";
    for (std::size_t t = 0; t < fu.size(); ++t) {
        if (t > 0) s += ",";
        s += std::to_string(fu[t]);
    }
    return s + "]";
}

}  // namespace

double configuration_cost(const ModelConfig& config, const FuCostParams& costs) {
    config.validate();
    costs.validate(config.type_count());
    std::vector<int> fu;
    fu.reserve(config.types.size());
    for (const auto& type : config.types) {
        fu.push_back(type.fu_count);
    }
    CostEvaluator evaluator(config, costs);
    return evaluator.evaluate(fu).cost;
}

OptimizationResult hill_climb(const ModelConfig& config, const FuCostParams& costs) {
    config.validate();
    costs.validate(config.type_count());
    const auto T = static_cast<std::size_t>(config.type_count());

    CostEvaluator evaluator(config, costs);
    std::vector<int> current(T, 1);
    for (std::size_t t = 0; t < T; ++t) {
        current[t] = std::clamp(current[t], costs.fu_min[t], costs.fu_max[t]);
    }
    double current_cost = evaluator.evaluate(current).cost;

    while (true) {
        std::vector<int> best_neighbor;
        double best_cost = current_cost;
        for (std::size_t t = 0; t < T; ++t) {
            for (int delta : {-1, +1}) {
                std::vector<int> neighbor = current;
                neighbor[t] += delta;
                if (neighbor[t] < costs.fu_min[t] || neighbor[t] > costs.fu_max[t]) {
                    continue;
                }
                const double cost = evaluator.evaluate(neighbor).cost;
                if (cost < best_cost ||
                    (cost == best_cost && !best_neighbor.empty() && neighbor < best_neighbor)) {
                    best_cost = cost;
                    best_neighbor = std::move(neighbor);
                }
            }
        }
        if (best_neighbor.empty()) {
            break;  // local minimum
        }
        current = std::move(best_neighbor);
        current_cost = best_cost;
    }

    OptimizationResult result;
    result.best_fu = current;
    result.best_cost = current_cost;
    result.surface = evaluator.visited();
    result.evaluations = evaluator.evaluations();
    return result;
}

OptimizationResult grid_search(const ModelConfig& config, const FuCostParams& costs) {
    config.validate();
    costs.validate(config.type_count());
    const auto T = static_cast<std::size_t>(config.type_count());

    std::uint64_t grid_points = 1;
    for (std::size_t t = 0; t < T; ++t) {
        grid_points *= static_cast<std::uint64_t>(costs.fu_max[t] - costs.fu_min[t] + 1);
        if (grid_points > static_cast<std::uint64_t>(costs.evaluation_cap)) {
            throw EvaluationCapExceeded("grid has more than " +
                                        std::to_string(costs.evaluation_cap) +
                                        " configurations; narrow the bounds");
        }
    }

    CostEvaluator evaluator(config, costs);
    OptimizationResult result;

    // Lexicographic walk; strict < keeps the first (lexicographically
    // smallest) configuration on ties.
    std::vector<int> fu(costs.fu_min);
    bool done = false;
    while (!done) {
        const SurfacePoint& point = evaluator.evaluate(fu);
        if (result.best_fu.empty() || point.cost < result.best_cost) {
            result.best_fu = fu;
            result.best_cost = point.cost;
        }
        std::size_t t = T;
        while (t > 0) {
            --t;
            if (fu[t] < costs.fu_max[t]) {
                ++fu[t];
                break;
            }
            fu[t] = costs.fu_min[t];
            if (t == 0) {
                done = true;
            }
        }
    }

    result.surface = evaluator.visited();
    result.evaluations = evaluator.evaluations();
    return result;
}

std::optional<std::string> convexity_violation(const OptimizationResult& climbed,
                                               const OptimizationResult& exhaustive) {
    if (climbed.best_cost <= exhaustive.best_cost && climbed.best_fu == exhaustive.best_fu) {
        return std::nullopt;
    }
    if (climbed.best_cost == exhaustive.best_cost) {
        return std::nullopt;  // distinct configurations with identical cost
    }
    std::ostringstream os;
    os << "ConvexityViolation: hill climb stopped at " << fu_to_string(climbed.best_fu)
       << " (cost " << climbed.best_cost << ") but the global minimum is "
       << fu_to_string(exhaustive.best_fu) << " (cost " << exhaustive.best_cost << ")";
    return os.str();
}

}  // namespace iqm
