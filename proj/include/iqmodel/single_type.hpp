#pragma once

#include <memory>

#include "iqmodel/distributions.hpp"
#include "iqmodel/transition_matrix.hpp"

namespace iqm {

// Inputs of the one-instruction-type model over states 0..N.
struct SingleTypeParams {
    int capacity = 0;   // N
    int fu_count = 1;   // F
    double rho = 0.0;   // per-cycle operand readiness probability
    std::shared_ptr<const ArrivalDist> arrival;
};

// Issue-substep matrix over occupancies 0..N. Entry (i,j) with d = i-j:
//   0                                   d < 0 or d > F
//   C(i,d) rho^d (1-rho)^j              0 <= d < F   (exactly d ready)
//   sum_{k=F..i} C(i,k) rho^k (1-rho)^(i-k)   d = F  (at least F ready)
// Lower-triangular by construction; rows sum to 1.
TransitionMatrix consumption_matrix_1d(int capacity, int fu_count, double rho);
TransitionMatrix consumption_matrix_1d(const SingleTypeParams& params);

// Dispatch-substep matrix over occupancies 0..N. Entry (i,j):
//   0            j < i
//   pmf(j-i)     i <= j < N
//   complement   j = N  (all remaining mass: the IQ fills up)
// Upper-triangular; rows sum to 1 exactly by construction.
TransitionMatrix arrival_matrix_1d(int capacity, const ArrivalDist& arrival);
TransitionMatrix arrival_matrix_1d(const SingleTypeParams& params);

}  // namespace iqm
