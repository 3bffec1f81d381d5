#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace iqm {

// Per-type instruction counts resident in the IQ: counts[t] >= 0 and the
// component sum never exceeds the owning space's capacity.
using OccupancyState = std::vector<int>;

// Exact number of occupancy states for `type_count` instruction types and an
// IQ of size `capacity`: (T+N)! / (N! T!), computed with exact integer
// arithmetic. Throws OverflowError if the value does not fit in 64 bits.
std::uint64_t state_space_size(int type_count, int capacity);

// Dense transition matrices become impractical well before this; refuse
// rather than thrash.
inline constexpr std::uint64_t kDefaultStateCeiling = 20'000;

// Ordered enumeration of all occupancy states, ascending lexicographically
// with the leftmost component most significant. Immutable after construction.
class StateSpace {
public:
    static StateSpace enumerate(int type_count, int capacity,
                                std::uint64_t max_states = kDefaultStateCeiling);

    int type_count() const noexcept { return type_count_; }
    int capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return states_.size(); }

    const OccupancyState& operator[](std::size_t index) const { return states_[index]; }
    const std::vector<OccupancyState>& states() const noexcept { return states_; }

    // Exact inverse of operator[]; throws DomainError for tuples outside the
    // space.
    std::size_t index_of(const OccupancyState& state) const;

    // True iff the state's components sum to the full IQ capacity.
    bool is_boundary(std::size_t index) const;
    static bool is_boundary(const OccupancyState& state, int capacity);

private:
    StateSpace(int type_count, int capacity, std::vector<OccupancyState> states);

    int type_count_;
    int capacity_;
    std::vector<OccupancyState> states_;
};

}  // namespace iqm
