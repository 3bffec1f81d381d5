#include "iqmodel/distributions.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "iqmodel/errors.hpp"

namespace iqm {

double poisson_pmf(double mean, int k) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("poisson_pmf: mean must be finite and >= 0, got " + std::to_string(mean));
    }
    if (k < 0) {
        throw DomainError("poisson_pmf: count must be >= 0, got " + std::to_string(k));
    }
    if (mean == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    if (k <= 20 && mean <= 700.0) {
        double p = std::exp(-mean);
        for (int i = 1; i <= k; ++i) {
            p *= mean / static_cast<double>(i);
        }
        return p;
    }
    return std::exp(static_cast<double>(k) * std::log(mean) - mean - std::lgamma(static_cast<double>(k) + 1.0));
}

double binomial_pmf(int trials, double success_prob, int successes) {
    if (trials < 0 || successes < 0 || successes > trials) {
        throw DomainError("binomial_pmf: need 0 <= k <= n, got n=" + std::to_string(trials) +
                          " k=" + std::to_string(successes));
    }
    if (!(success_prob >= 0.0 && success_prob <= 1.0)) {
        throw DomainError("binomial_pmf: probability outside [0,1]: " + std::to_string(success_prob));
    }
    if (success_prob == 0.0) {
        return successes == 0 ? 1.0 : 0.0;
    }
    if (success_prob == 1.0) {
        return successes == trials ? 1.0 : 0.0;
    }
    if (trials <= 60) {
        // Exact multiplicative binomial coefficient keeps small cases free of
        // lgamma rounding.
        double coeff = 1.0;
        const int k = std::min(successes, trials - successes);
        for (int i = 1; i <= k; ++i) {
            coeff = coeff * static_cast<double>(trials - k + i) / static_cast<double>(i);
        }
        return coeff * std::pow(success_prob, successes) *
               std::pow(1.0 - success_prob, trials - successes);
    }
    const double log_coeff = std::lgamma(trials + 1.0) - std::lgamma(successes + 1.0) -
                             std::lgamma(trials - successes + 1.0);
    return std::exp(log_coeff + successes * std::log(success_prob) +
                    (trials - successes) * std::log1p(-success_prob));
}

PoissonArrival::PoissonArrival(double mean) : mean_(mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("poisson arrival: mean must be finite and >= 0, got " + std::to_string(mean));
    }
}

double PoissonArrival::pmf(int count) const {
    if (count < 0) {
        return 0.0;
    }
    return poisson_pmf(mean_, count);
}

std::string PoissonArrival::describe() const {
    std::ostringstream os;
    os << "poisson(mean=" << mean_ << ")";
    return os.str();
}

TableArrival::TableArrival(std::vector<double> masses) : masses_(std::move(masses)) {
    if (masses_.empty()) {
        throw DomainError("table arrival: pmf table must not be empty");
    }
    double total = 0.0;
    for (double m : masses_) {
        if (!(m >= 0.0) || !std::isfinite(m)) {
            throw DomainError("table arrival: pmf entries must be finite and >= 0");
        }
        total += m;
    }
    if (total <= 0.0) {
        throw DomainError("table arrival: pmf table must have positive total mass");
    }
    for (double& m : masses_) {
        m /= total;
    }
    for (std::size_t k = 0; k < masses_.size(); ++k) {
        mean_ += static_cast<double>(k) * masses_[k];
    }
}

double TableArrival::pmf(int count) const {
    if (count < 0 || static_cast<std::size_t>(count) >= masses_.size()) {
        return 0.0;
    }
    return masses_[static_cast<std::size_t>(count)];
}

std::string TableArrival::describe() const {
    std::ostringstream os;
    os << "table(" << masses_.size() << " entries, mean=" << mean_ << ")";
    return os.str();
}

}  // namespace iqm
