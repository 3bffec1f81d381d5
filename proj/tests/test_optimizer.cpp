#include <cmath>
#include <map>
#include <vector>

#include <doctest.h>

#include "iqmodel/errors.hpp"
#include "iqmodel/optimizer.hpp"
#include "iqmodel/solver.hpp"
#include "reference_data.hpp"

using iqm::FuCostParams;
using iqm::grid_search;
using iqm::hill_climb;
using iqm::make_poisson_config;
using iqm::ModelConfig;
using iqm::OptimizationResult;

namespace {

ModelConfig sweep_model(int fu0 = 1, int fu1 = 1) {
    return make_poisson_config(16, {2.0, 1.0}, {0.8, 0.8}, {fu0, fu1});
}

FuCostParams sweep_costs(double c0, double c1) {
    FuCostParams costs;
    costs.unit_cost = {c0, c1};
    costs.fu_min = {1, 1};
    costs.fu_max = {8, 8};
    return costs;
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("configuration cost of the reference design points") {
    CHECK(std::abs(iqm::configuration_cost(sweep_model(3, 2), sweep_costs(1, 3)) -
                   refdata::kSweepCheapBestCostExact) < 1e-5);
    CHECK(std::abs(iqm::configuration_cost(sweep_model(2, 1), sweep_costs(2, 6)) -
                   refdata::kSweepCostlyBestCostExact) < 1e-5);
}

TEST_CASE("zero hardware cost reduces to the total queue length") {
    const ModelConfig model = make_poisson_config(3, {1.5, 1.0}, {0.75, 0.8}, {2, 1});
    FuCostParams costs;
    costs.unit_cost = {0.0, 0.0};
    costs.fu_min = {1, 1};
    costs.fu_max = {8, 8};
    const double cost = iqm::configuration_cost(model, costs);
    const auto report = iqm::solve_model(model);
    CHECK(std::abs(cost - report.total_queue_length) < 1e-12);
}

TEST_CASE("hill climb finds the reference optima") {
    const OptimizationResult cheap = hill_climb(sweep_model(), sweep_costs(1, 3));
    CHECK(cheap.best_fu == std::vector<int>{3, 2});
    CHECK(std::abs(cheap.best_cost - refdata::kSweepCheapBestCostExact) < 1e-5);

    const OptimizationResult costly = hill_climb(sweep_model(), sweep_costs(2, 6));
    CHECK(costly.best_fu == std::vector<int>{2, 1});
    CHECK(std::abs(costly.best_cost - refdata::kSweepCostlyBestCostExact) < 1e-5);
}

TEST_CASE("degenerate bounds return the single admissible configuration") {
    FuCostParams costs = sweep_costs(1, 3);
    costs.fu_min = {2, 2};
    costs.fu_max = {2, 2};
    const OptimizationResult result = hill_climb(sweep_model(), costs);
    CHECK(result.best_fu == std::vector<int>{2, 2});
    CHECK(result.evaluations == 1);

    const OptimizationResult grid = grid_search(sweep_model(), costs);
    CHECK(grid.best_fu == std::vector<int>{2, 2});
    CHECK(grid.evaluations == 1);
}

TEST_CASE("grid search agrees with hill climbing on both cost scenarios") {
    const OptimizationResult grid_cheap = grid_search(sweep_model(), sweep_costs(1, 3));
    CHECK(grid_cheap.best_fu == std::vector<int>{3, 2});
    CHECK(grid_cheap.evaluations == 64);
    const OptimizationResult climb_cheap = hill_climb(sweep_model(), sweep_costs(1, 3));
    CHECK(climb_cheap.best_fu == grid_cheap.best_fu);
    CHECK(climb_cheap.best_cost == grid_cheap.best_cost);
    CHECK_FALSE(iqm::convexity_violation(climb_cheap, grid_cheap).has_value());

    const OptimizationResult grid_costly = grid_search(sweep_model(), sweep_costs(2, 6));
    CHECK(grid_costly.best_fu == std::vector<int>{2, 1});
    const OptimizationResult climb_costly = hill_climb(sweep_model(), sweep_costs(2, 6));
    CHECK(climb_costly.best_fu == grid_costly.best_fu);
    CHECK(climb_costly.best_cost == grid_costly.best_cost);
}

TEST_CASE("evaluation cap rejects oversized grids before solving") {
    FuCostParams costs;
    costs.unit_cost = {1.0, 1.0};
    costs.fu_min = {1, 1};
    costs.fu_max = {65, 64};  // 4160 > 4096
    CHECK_THROWS_AS(grid_search(sweep_model(), costs), iqm::EvaluationCapExceeded);
}

TEST_CASE("queue term never grows when FUs are added") {
    const OptimizationResult grid = grid_search(sweep_model(), sweep_costs(1, 3));
    std::map<std::vector<int>, const iqm::SurfacePoint*> by_fu;
    for (const auto& point : grid.surface) {
        by_fu[point.fu] = &point;
    }
    for (const auto& [fu, point] : by_fu) {
        double queue = 0.0;
        for (double l : point->queue_length) queue += l;
        for (std::size_t t = 0; t < fu.size(); ++t) {
            std::vector<int> more = fu;
            ++more[t];
            auto it = by_fu.find(more);
            if (it == by_fu.end()) continue;
            double queue_more = 0.0;
            for (double l : it->second->queue_length) queue_more += l;
            CHECK(queue_more <= queue + 1e-6);
            // and the hardware term alone strictly increases
            CHECK(it->second->cost - queue_more > point->cost - queue);
        }
    }
}

TEST_CASE("surface entries are reproducible") {
    const OptimizationResult grid = grid_search(sweep_model(), sweep_costs(1, 3));
    for (std::size_t k = 0; k < grid.surface.size(); k += 17) {
        const auto& point = grid.surface[k];
        const double again =
            iqm::configuration_cost(sweep_model(point.fu[0], point.fu[1]), sweep_costs(1, 3));
        CHECK(again == point.cost);
    }
}

TEST_CASE("convexity diagnostic fires on a fabricated gap") {
    OptimizationResult climbed;
    climbed.best_fu = {2, 2};
    climbed.best_cost = 11.0;
    OptimizationResult exhaustive;
    exhaustive.best_fu = {3, 1};
    exhaustive.best_cost = 10.0;
    const auto diagnostic = iqm::convexity_violation(climbed, exhaustive);
    REQUIRE(diagnostic.has_value());
    CHECK(diagnostic->find("ConvexityViolation") == 0);
}

TEST_CASE("cost parameter validation") {
    FuCostParams costs;
    costs.unit_cost = {1.0};
    costs.fu_min = {1};
    costs.fu_max = {8};
    CHECK_THROWS_AS(costs.validate(2), iqm::DomainError);
    costs.unit_cost = {1.0, -2.0};
    costs.fu_min = {1, 1};
    costs.fu_max = {8, 8};
    CHECK_THROWS_AS(costs.validate(2), iqm::DomainError);
    costs.unit_cost = {1.0, 2.0};
    costs.fu_min = {3, 1};
    costs.fu_max = {2, 8};
    CHECK_THROWS_AS(costs.validate(2), iqm::DomainError);
}

TEST_CASE("defaults pick up the config's unit costs and [1,8] bounds") {
    ModelConfig model = sweep_model();
    model.types[0].unit_cost = 1.0;
    model.types[1].unit_cost = 3.0;
    const FuCostParams defaults = FuCostParams::defaults(model);
    CHECK(defaults.unit_cost == std::vector<double>{1.0, 3.0});
    CHECK(defaults.fu_min == std::vector<int>{1, 1});
    CHECK(defaults.fu_max == std::vector<int>{8, 8});
    CHECK(defaults.evaluation_cap == 4096);
}

}  // TEST_SUITE
