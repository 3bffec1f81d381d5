#include "iqmodel/single_type.hpp"

#include <algorithm>
#include <string>

#include "iqmodel/errors.hpp"

namespace iqm {

TransitionMatrix consumption_matrix_1d(int capacity, int fu_count, double rho) {
    if (capacity < 1) {
        throw DomainError("consumption matrix: capacity must be >= 1, got " + std::to_string(capacity));
    }
    if (fu_count < 1) {
        throw DomainError("consumption matrix: FU count must be >= 1, got " + std::to_string(fu_count));
    }
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw DomainError("consumption matrix: readiness outside [0,1]: " + std::to_string(rho));
    }

    const std::size_t dim = static_cast<std::size_t>(capacity) + 1;
    TransitionMatrix mat(dim, MatrixRole::consumption);
    for (int i = 0; i <= capacity; ++i) {
        for (int j = 0; j <= i; ++j) {
            const int issued = i - j;
            if (issued > fu_count) {
                continue;  // not enough FUs to drain that far
            }
            double p;
            if (issued == fu_count) {
                // Every FU busy: at least F of the i residents were ready.
                p = 0.0;
                for (int k = fu_count; k <= i; ++k) {
                    p += binomial_pmf(i, rho, k);
                }
            } else {
                // Fewer ready than FUs: exactly i-j issued.
                p = binomial_pmf(i, rho, issued);
            }
            mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p;
        }
    }
    mat.require_row_stochastic();
    return mat;
}

TransitionMatrix consumption_matrix_1d(const SingleTypeParams& params) {
    return consumption_matrix_1d(params.capacity, params.fu_count, params.rho);
}

TransitionMatrix arrival_matrix_1d(int capacity, const ArrivalDist& arrival) {
    if (capacity < 1) {
        throw DomainError("arrival matrix: capacity must be >= 1, got " + std::to_string(capacity));
    }

    const std::size_t dim = static_cast<std::size_t>(capacity) + 1;
    TransitionMatrix mat(dim, MatrixRole::arrival);
    for (int i = 0; i <= capacity; ++i) {
        double below_capacity = 0.0;
        for (int j = i; j < capacity; ++j) {
            const double p = arrival.pmf(j - i);
            mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p;
            below_capacity += p;
        }
        // The full-IQ column absorbs all remaining mass, so each row sums to
        // 1 by construction.
        mat(static_cast<std::size_t>(i), static_cast<std::size_t>(capacity)) =
            std::max(0.0, 1.0 - below_capacity);
    }
    mat.require_row_stochastic();
    return mat;
}

TransitionMatrix arrival_matrix_1d(const SingleTypeParams& params) {
    if (!params.arrival) {
        throw DomainError("arrival matrix: arrival distribution not set");
    }
    return arrival_matrix_1d(params.capacity, *params.arrival);
}

}  // namespace iqm
