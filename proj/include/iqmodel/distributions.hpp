#pragma once

#include <memory>
#include <string>
#include <vector>

namespace iqm {

// Poisson probability mass mu^k e^{-mu} / k!.
// Evaluated in log space for large k / mean so intermediate terms cannot
// overflow. Throws DomainError for mean < 0 or k < 0.
double poisson_pmf(double mean, int k);

// Binomial probability mass C(n,k) p^k (1-p)^(n-k).
// Throws DomainError unless 0 <= k <= n and 0 <= p <= 1.
double binomial_pmf(int trials, double success_prob, int successes);

// Per-cycle arrival-count distribution. The analytic builders and the
// simulator only ever consume the pmf, so anything with a pmf (a fitted
// empirical table, for instance) can stand in for the built-in Poisson.
class ArrivalDist {
public:
    virtual ~ArrivalDist() = default;

    // pmf(k) for k < 0 is 0 by convention.
    virtual double pmf(int count) const = 0;
    virtual double mean() const = 0;
    virtual std::string describe() const = 0;
};

class PoissonArrival final : public ArrivalDist {
public:
    explicit PoissonArrival(double mean);

    double pmf(int count) const override;
    double mean() const override { return mean_; }
    std::string describe() const override;

private:
    double mean_;
};

// Tabulated pmf over counts 0..len-1; normalized at construction.
class TableArrival final : public ArrivalDist {
public:
    explicit TableArrival(std::vector<double> masses);

    double pmf(int count) const override;
    double mean() const override { return mean_; }
    std::string describe() const override;

private:
    std::vector<double> masses_;
    double mean_ = 0.0;
};

}  // namespace iqm
