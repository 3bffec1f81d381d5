#pragma once

#include <memory>
#include <string>
#include <vector>

#include "iqmodel/distributions.hpp"

namespace iqm {

// One instruction type: its arrival process, operand-readiness probability,
// FU pool size, and (for the optimizer) the cost of one FU.
struct InstructionType {
    std::string name;
    std::shared_ptr<const ArrivalDist> arrival;
    double rho = 0.0;
    int fu_count = 1;
    double unit_cost = 0.0;
};

// Full problem statement: IQ capacity plus per-type parameters.
struct ModelConfig {
    int capacity = 0;  // N
    std::vector<InstructionType> types;

    int type_count() const { return static_cast<int>(types.size()); }
    double arrival_mean(int type) const { return types[static_cast<std::size_t>(type)].arrival->mean(); }

    // Throws DomainError on any violated invariant (empty types, rho outside
    // [0,1], fu < 1, all arrival means zero, ...).
    void validate() const;
};

// Probability that the next incoming instruction is of the given type:
// mu_t / sum_k mu_k. Throws DomainError when every arrival mean is zero.
double type_probability(const ModelConfig& config, int type);

// Shorthand used by tests and the Python bindings: Poisson arrivals only.
ModelConfig make_poisson_config(int capacity, const std::vector<double>& means,
                                const std::vector<double>& rhos,
                                const std::vector<int>& fu_counts);

}  // namespace iqm
