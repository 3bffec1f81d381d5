#include "iqmodel/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "iqmodel/errors.hpp"
#include "iqmodel/multi_type.hpp"

namespace iqm {

namespace {

// Number of closed communicating classes in the support digraph. The
// stationary distribution is unique iff exactly one class is closed.
std::size_t closed_class_count(const TransitionMatrix& mat) {
    const std::size_t n = mat.dim();
    std::vector<std::vector<std::size_t>> out(n), in(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (mat(i, j) > 0.0 && i != j) {
                out[i].push_back(j);
                in[j].push_back(i);
            }
        }
    }

    // Kosaraju, iterative.
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        stack.emplace_back(start, 0);
        seen[start] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < out[node].size()) {
                const std::size_t child = out[node][next++];
                if (!seen[child]) {
                    seen[child] = 1;
                    stack.emplace_back(child, 0);
                }
            } else {
                order.push_back(node);
                stack.pop_back();
            }
        }
    }

    std::vector<std::size_t> component(n, n);
    std::size_t components = 0;
    std::vector<std::size_t> dfs;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (component[*it] != n) continue;
        const std::size_t label = components++;
        dfs.push_back(*it);
        component[*it] = label;
        while (!dfs.empty()) {
            const std::size_t node = dfs.back();
            dfs.pop_back();
            for (std::size_t prev : in[node]) {
                if (component[prev] == n) {
                    component[prev] = label;
                    dfs.push_back(prev);
                }
            }
        }
    }

    std::vector<char> closed(components, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : out[i]) {
            if (component[i] != component[j]) {
                closed[component[i]] = 0;
            }
        }
    }
    return static_cast<std::size_t>(std::count(closed.begin(), closed.end(), 1));
}

}  // namespace

SteadyStateSolution steady_state(const TransitionMatrix& complete,
                                 const SteadyStateOptions& options) {
    complete.require_row_stochastic();
    const std::size_t n = complete.dim();

    std::vector<double> pi(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);

    SteadyStateSolution solution;
    bool converged = false;
    for (long long iter = 1; iter <= options.max_iterations; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double weight = pi[i];
            if (weight == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                next[j] += weight * complete(i, j);
            }
        }

        // next is exactly pi * P, so this measures the residual of the
        // current iterate; converging on it means the vector we hand back
        // satisfies the residual bound by direct measurement.
        double residual = 0.0;
        double l1_change = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double diff = std::abs(next[j] - pi[j]);
            residual = std::max(residual, diff);
            l1_change += diff;
        }

        solution.iterations = iter;
        solution.residual = residual;
        if (residual <= options.residual_tol || l1_change < options.stall_tol) {
            converged = true;
            break;
        }

        double total = 0.0;
        for (double v : next) total += v;
        for (std::size_t j = 0; j < n; ++j) {
            pi[j] = next[j] / total;
        }
    }
    if (!converged) {
        throw NoConvergence("steady state: residual " + std::to_string(solution.residual) +
                            " after " + std::to_string(solution.iterations) +
                            " iterations; the chain may be periodic or reducible");
    }

    solution.pi = std::move(pi);
    solution.unique = closed_class_count(complete) == 1;
    return solution;
}

SteadyStateReport metrics(const std::vector<double>& pi, const StateSpace& space,
                          const ModelConfig& config) {
    if (pi.size() != space.size()) {
        throw DimensionMismatch("metrics: pi has " + std::to_string(pi.size()) +
                                " entries but the space has " + std::to_string(space.size()));
    }
    const int T = config.type_count();
    if (T != space.type_count()) {
        throw DimensionMismatch("metrics: config and space disagree on type count");
    }

    SteadyStateReport report;
    report.pi = pi;
    report.queue_length.assign(static_cast<std::size_t>(T), 0.0);
    for (std::size_t k = 0; k < space.size(); ++k) {
        const OccupancyState& state = space[k];
        for (int t = 0; t < T; ++t) {
            report.queue_length[static_cast<std::size_t>(t)] +=
                static_cast<double>(state[static_cast<std::size_t>(t)]) * pi[k];
        }
        if (space.is_boundary(k)) {
            report.p_full += pi[k];
        }
    }
    report.total_queue_length = 0.0;
    for (double l : report.queue_length) {
        report.total_queue_length += l;
    }

    report.flow_ratio.assign(static_cast<std::size_t>(T), 0.0);
    for (int t = 0; t < T; ++t) {
        const double length = report.queue_length[static_cast<std::size_t>(t)];
        if (length > 0.0) {
            report.flow_ratio[static_cast<std::size_t>(t)] = config.arrival_mean(t) / length;
        } else {
            report.flow_ratio[static_cast<std::size_t>(t)] =
                std::numeric_limits<double>::quiet_NaN();
            report.warnings.push_back("FlowRatioUndefined:" +
                                      config.types[static_cast<std::size_t>(t)].name);
        }
    }
    return report;
}

SteadyStateReport solve_model(const ModelConfig& config, std::uint64_t max_states,
                              const SteadyStateOptions& options) {
    config.validate();
    const StateSpace space = StateSpace::enumerate(config.type_count(), config.capacity, max_states);
    const TransitionMatrix consumption = joint_consumption_matrix(config, space);
    const TransitionMatrix arrival = joint_arrival_matrix(config, space);
    const TransitionMatrix complete = complete_matrix(consumption, arrival);
    const SteadyStateSolution solution = steady_state(complete, options);

    SteadyStateReport report = metrics(solution.pi, space, config);
    report.iterations = solution.iterations;
    report.residual = solution.residual;
    if (!solution.unique) {
        report.warnings.insert(report.warnings.begin(), "NonUniqueSteadyState");
    }
    return report;
}

}  // namespace iqm
