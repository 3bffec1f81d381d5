#pragma once

#include <cstdint>
#include <vector>

#include "iqmodel/model_config.hpp"
#include "iqmodel/state_space.hpp"
#include "iqmodel/transition_matrix.hpp"

namespace iqm {

// (sum n_t)! / prod(n_t!), exact. Throws OverflowError beyond 64 bits and
// DomainError on negative counts.
std::uint64_t multinomial_coefficient(const std::vector<int>& counts);

// Joint issue-substep matrix: entry (s_i, s_j) is the product over types of
// the per-type single-type consumption entries (i_t, j_t), each per-type
// matrix built at full size N with that type's rho and FU count.
TransitionMatrix joint_consumption_matrix(const ModelConfig& config, const StateSpace& space);

// Joint dispatch-substep matrix. For end states below capacity the entry is
// the product of the per-type raw pmfs of the per-type increments. End states
// at full capacity receive the remaining row mass, split across boundary
// states by a multinomial over the incoming instruction mix (the incoming
// type probabilities mu_t / sum mu). Entries where any component decreases
// are zero. Rows sum to 1.
TransitionMatrix joint_arrival_matrix(const ModelConfig& config, const StateSpace& space);

}  // namespace iqm
