#include "iqmodel/model_config.hpp"

#include <string>

#include "iqmodel/errors.hpp"

namespace iqm {

void ModelConfig::validate() const {
    if (capacity < 1) {
        throw DomainError("config: IQ capacity must be >= 1, got " + std::to_string(capacity));
    }
    if (types.empty()) {
        throw DomainError("config: at least one instruction type required");
    }
    double mean_total = 0.0;
    for (std::size_t t = 0; t < types.size(); ++t) {
        const auto& type = types[t];
        const std::string where = "config: type '" + type.name + "': ";
        if (!type.arrival) {
            throw DomainError(where + "arrival distribution not set");
        }
        if (type.arrival->mean() < 0.0) {
            throw DomainError(where + "arrival mean must be >= 0");
        }
        if (!(type.rho >= 0.0 && type.rho <= 1.0)) {
            throw DomainError(where + "readiness outside [0,1]: " + std::to_string(type.rho));
        }
        if (type.fu_count < 1) {
            throw DomainError(where + "FU count must be >= 1, got " + std::to_string(type.fu_count));
        }
        if (type.unit_cost < 0.0) {
            throw DomainError(where + "unit cost must be >= 0");
        }
        mean_total += type.arrival->mean();
    }
    if (!(mean_total > 0.0)) {
        throw DomainError("config: all arrival means are zero; nothing ever enters the IQ");
    }
}

double type_probability(const ModelConfig& config, int type) {
    if (type < 0 || type >= config.type_count()) {
        throw DomainError("type_probability: type index out of range");
    }
    double total = 0.0;
    for (const auto& t : config.types) {
        total += t.arrival->mean();
    }
    if (!(total > 0.0)) {
        throw DomainError("type_probability: all arrival means are zero");
    }
    return config.arrival_mean(type) / total;
}

ModelConfig make_poisson_config(int capacity, const std::vector<double>& means,
                                const std::vector<double>& rhos,
                                const std::vector<int>& fu_counts) {
    if (means.size() != rhos.size() || means.size() != fu_counts.size()) {
        throw DomainError("config: means, rhos and fu counts must have equal length");
    }
    ModelConfig config;
    config.capacity = capacity;
    config.types.reserve(means.size());
    for (std::size_t t = 0; t < means.size(); ++t) {
        InstructionType type;
        type.name = "I" + std::to_string(t + 1);
        type.arrival = std::make_shared<PoissonArrival>(means[t]);
        type.rho = rhos[t];
        type.fu_count = fu_counts[t];
        config.types.push_back(std::move(type));
    }
    config.validate();
    return config;
}

}  // namespace iqm
