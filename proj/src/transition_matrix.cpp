#include "iqmodel/transition_matrix.hpp"

#include <cmath>
#include <string>

#include "iqmodel/errors.hpp"

namespace iqm {

std::string to_string(MatrixRole role) {
    switch (role) {
        case MatrixRole::consumption: return "consumption";
        case MatrixRole::arrival: return "arrival";
        case MatrixRole::complete: return "complete";
    }
    return "unknown";
}

TransitionMatrix::TransitionMatrix(std::size_t dim, MatrixRole role)
    : dim_(dim), role_(role), data_(dim * dim, 0.0) {
    if (dim == 0) {
        throw DomainError("transition matrix: dimension must be >= 1");
    }
}

double TransitionMatrix::row_sum(std::size_t row) const {
    double sum = 0.0;
    const double* p = data_.data() + row * dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
        sum += p[j];
    }
    return sum;
}

void TransitionMatrix::require_row_stochastic(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const double v = (*this)(i, j);
            if (!(v >= 0.0 && v <= 1.0) || std::isnan(v)) {
                throw NumericalError(to_string(role_) + " matrix entry (" + std::to_string(i) +
                                     "," + std::to_string(j) + ") outside [0,1]: " +
                                     std::to_string(v));
            }
        }
        const double sum = row_sum(i);
        if (std::abs(sum - 1.0) > tol) {
            throw NumericalError(to_string(role_) + " matrix row " + std::to_string(i) +
                                 " sums to " + std::to_string(sum) + ", expected 1");
        }
    }
}

TransitionMatrix complete_matrix(const TransitionMatrix& consumption,
                                 const TransitionMatrix& arrival) {
    if (consumption.dim() != arrival.dim()) {
        throw DimensionMismatch("complete matrix: consumption is " +
                                std::to_string(consumption.dim()) + "x" +
                                std::to_string(consumption.dim()) + " but arrival is " +
                                std::to_string(arrival.dim()) + "x" +
                                std::to_string(arrival.dim()));
    }
    if (consumption.role() != MatrixRole::consumption || arrival.role() != MatrixRole::arrival) {
        throw DimensionMismatch("complete matrix: expected roles consumption x arrival, got " +
                                to_string(consumption.role()) + " x " + to_string(arrival.role()));
    }

    const std::size_t n = consumption.dim();
    TransitionMatrix product(n, MatrixRole::complete);
    // i-m-j loop: each output entry still accumulates over m in ascending
    // order, so the summation order is fixed.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < n; ++m) {
            const double c = consumption(i, m);
            if (c == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                product(i, j) += c * arrival(m, j);
            }
        }
    }
    product.require_row_stochastic();
    return product;
}

}  // namespace iqm
