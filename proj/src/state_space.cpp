#include "iqmodel/state_space.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "iqmodel/errors.hpp"

namespace iqm {

namespace {

std::string tuple_to_string(const OccupancyState& state) {
    std::string s = "<";
    for (std::size_t t = 0; t < state.size(); ++t) {
        if (t > 0) s += ",";
        s += std::to_string(state[t]);
    }
    return s + ">";
}

void require_positive(int type_count, int capacity) {
    if (type_count < 1) {
        throw DomainError("state space: type count must be >= 1, got " + std::to_string(type_count));
    }
    if (capacity < 1) {
        throw DomainError("state space: IQ capacity must be >= 1, got " + std::to_string(capacity));
    }
}

}  // namespace

std::uint64_t state_space_size(int type_count, int capacity) {
    require_positive(type_count, capacity);
    // C(T+N, T) as a running product; each intermediate value is itself a
    // binomial coefficient, so the division is always exact.
    std::uint64_t result = 1;
    const auto n = static_cast<std::uint64_t>(capacity);
    for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(type_count); ++i) {
        std::uint64_t scaled = 0;
        if (__builtin_mul_overflow(result, n + i, &scaled)) {
            throw OverflowError("state space size exceeds 64-bit range for T=" +
                                std::to_string(type_count) + " N=" + std::to_string(capacity));
        }
        result = scaled / i;
    }
    return result;
}

StateSpace::StateSpace(int type_count, int capacity, std::vector<OccupancyState> states)
    : type_count_(type_count), capacity_(capacity), states_(std::move(states)) {}

StateSpace StateSpace::enumerate(int type_count, int capacity, std::uint64_t max_states) {
    require_positive(type_count, capacity);
    const std::uint64_t total = state_space_size(type_count, capacity);
    if (total > max_states) {
        throw CapacityExceeded("state space has " + std::to_string(total) +
                               " states, above the ceiling of " + std::to_string(max_states) +
                               " for dense matrices");
    }

    std::vector<OccupancyState> states;
    states.reserve(static_cast<std::size_t>(total));

    // Odometer over tuples with component sum <= capacity; emits lexicographic
    // ascending order directly.
    OccupancyState current(static_cast<std::size_t>(type_count), 0);
    int used = 0;
    while (true) {
        states.push_back(current);
        int t = type_count - 1;
        while (t >= 0) {
            if (used < capacity) {
                ++current[static_cast<std::size_t>(t)];
                ++used;
                break;
            }
            used -= current[static_cast<std::size_t>(t)];
            current[static_cast<std::size_t>(t)] = 0;
            --t;
        }
        if (t < 0) {
            break;
        }
    }
    return StateSpace(type_count, capacity, std::move(states));
}

std::size_t StateSpace::index_of(const OccupancyState& state) const {
    if (state.size() == states_.front().size()) {
        auto it = std::lower_bound(states_.begin(), states_.end(), state);
        if (it != states_.end() && *it == state) {
            return static_cast<std::size_t>(it - states_.begin());
        }
    }
    throw DomainError("state " + tuple_to_string(state) + " is not in the space (T=" +
                      std::to_string(type_count_) + ", N=" + std::to_string(capacity_) + ")");
}

bool StateSpace::is_boundary(std::size_t index) const {
    return is_boundary(states_[index], capacity_);
}

bool StateSpace::is_boundary(const OccupancyState& state, int capacity) {
    return std::accumulate(state.begin(), state.end(), 0) == capacity;
}

}  // namespace iqm
