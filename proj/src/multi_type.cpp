#include "iqmodel/multi_type.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "iqmodel/errors.hpp"
#include "iqmodel/single_type.hpp"

namespace iqm {

std::uint64_t multinomial_coefficient(const std::vector<int>& counts) {
    std::uint64_t result = 1;
    std::uint64_t drawn = 0;
    for (int c : counts) {
        if (c < 0) {
            throw DomainError("multinomial coefficient: counts must be >= 0");
        }
        for (int i = 1; i <= c; ++i) {
            ++drawn;
            std::uint64_t scaled = 0;
            if (__builtin_mul_overflow(result, drawn, &scaled)) {
                throw OverflowError("multinomial coefficient exceeds 64-bit range");
            }
            // result * drawn / i is C(drawn, i) times the previous groups'
            // coefficient, so the division is exact at every step.
            result = scaled / static_cast<std::uint64_t>(i);
        }
    }
    return result;
}

namespace {

void require_compatible(const ModelConfig& config, const StateSpace& space) {
    config.validate();
    if (config.type_count() != space.type_count() || config.capacity != space.capacity()) {
        throw DimensionMismatch("joint builder: config is T=" + std::to_string(config.type_count()) +
                                " N=" + std::to_string(config.capacity) + " but space is T=" +
                                std::to_string(space.type_count()) + " N=" +
                                std::to_string(space.capacity()));
    }
}

}  // namespace

TransitionMatrix joint_consumption_matrix(const ModelConfig& config, const StateSpace& space) {
    require_compatible(config, space);
    const int T = config.type_count();

    // Each logical subqueue can hold up to the full IQ, so the per-type
    // matrices are built at size N regardless of the FU split.
    std::vector<TransitionMatrix> per_type;
    per_type.reserve(static_cast<std::size_t>(T));
    for (const auto& type : config.types) {
        per_type.push_back(consumption_matrix_1d(config.capacity, type.fu_count, type.rho));
    }

    TransitionMatrix mat(space.size(), MatrixRole::consumption);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const OccupancyState& from = space[i];
        for (std::size_t j = 0; j < space.size(); ++j) {
            const OccupancyState& to = space[j];
            double p = 1.0;
            for (int t = 0; t < T && p != 0.0; ++t) {
                p *= per_type[static_cast<std::size_t>(t)](
                    static_cast<std::size_t>(from[static_cast<std::size_t>(t)]),
                    static_cast<std::size_t>(to[static_cast<std::size_t>(t)]));
            }
            mat(i, j) = p;
        }
    }
    mat.require_row_stochastic();
    return mat;
}

TransitionMatrix joint_arrival_matrix(const ModelConfig& config, const StateSpace& space) {
    require_compatible(config, space);
    const int T = config.type_count();

    std::vector<double> type_prob(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        type_prob[static_cast<std::size_t>(t)] = type_probability(config, t);
    }

    TransitionMatrix mat(space.size(), MatrixRole::arrival);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const OccupancyState& from = space[i];

        // Below-capacity end states first: independent per-type draws.
        double interior_mass = 0.0;
        for (std::size_t j = 0; j < space.size(); ++j) {
            const OccupancyState& to = space[j];
            if (space.is_boundary(j)) {
                continue;
            }
            double p = 1.0;
            for (int t = 0; t < T && p != 0.0; ++t) {
                const int added = to[static_cast<std::size_t>(t)] - from[static_cast<std::size_t>(t)];
                p *= added < 0 ? 0.0
                               : config.types[static_cast<std::size_t>(t)].arrival->pmf(added);
            }
            mat(i, j) = p;
            interior_mass += p;
        }

        // Boundary end states split the remaining mass by the composition of
        // the instructions that fill the free slots.
        double remainder = 1.0 - interior_mass;
        bool clamped = false;
        if (remainder < 0.0) {
            if (remainder < -1e-9) {
                throw NumericalError("joint arrival: row " + std::to_string(i) +
                                     " interior mass " + std::to_string(interior_mass) +
                                     " exceeds 1");
            }
            remainder = 0.0;
            clamped = true;
        }
        std::vector<int> increment(static_cast<std::size_t>(T));
        for (std::size_t j = 0; j < space.size(); ++j) {
            const OccupancyState& to = space[j];
            if (!space.is_boundary(j)) {
                continue;
            }
            bool reachable = true;
            for (int t = 0; t < T; ++t) {
                const int added = to[static_cast<std::size_t>(t)] - from[static_cast<std::size_t>(t)];
                if (added < 0) {
                    reachable = false;
                    break;
                }
                increment[static_cast<std::size_t>(t)] = added;
            }
            if (!reachable) {
                continue;
            }
            double mix = static_cast<double>(multinomial_coefficient(increment));
            for (int t = 0; t < T; ++t) {
                mix *= std::pow(type_prob[static_cast<std::size_t>(t)],
                                increment[static_cast<std::size_t>(t)]);
            }
            mat(i, j) = remainder * mix;
        }

        if (clamped) {
            const double sum = mat.row_sum(i);
            if (std::abs(sum - 1.0) > 1e-9) {
                throw NumericalError("joint arrival: row " + std::to_string(i) + " sums to " +
                                     std::to_string(sum) + " after clamping");
            }
            for (std::size_t j = 0; j < space.size(); ++j) {
                mat(i, j) /= sum;
            }
        }
    }
    mat.require_row_stochastic();
    return mat;
}

}  // namespace iqm
