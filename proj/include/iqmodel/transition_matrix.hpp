#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace iqm {

enum class MatrixRole { consumption, arrival, complete };

std::string to_string(MatrixRole role);

// Dense row-stochastic matrix over state-space indices. Row i holds the
// one-substep (or one-cycle, for the complete role) transition probabilities
// out of state i.
class TransitionMatrix {
public:
    TransitionMatrix(std::size_t dim, MatrixRole role);

    std::size_t dim() const noexcept { return dim_; }
    MatrixRole role() const noexcept { return role_; }

    double operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }
    double& operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }

    double row_sum(std::size_t row) const;

    // Throws NumericalError if any entry is outside [0,1] or any row sum
    // deviates from 1 by more than `tol`.
    void require_row_stochastic(double tol = 1e-9) const;

    const std::vector<double>& data() const noexcept { return data_; }

private:
    std::size_t dim_;
    MatrixRole role_;
    std::vector<double> data_;
};

// P = C x A, the per-cycle matrix: issue substep followed by dispatch
// substep. Entry dot products accumulate over the intermediate state in
// ascending index order, so the result is reproducible bit for bit.
// Throws DimensionMismatch on size or role mismatch.
TransitionMatrix complete_matrix(const TransitionMatrix& consumption,
                                 const TransitionMatrix& arrival);

}  // namespace iqm
