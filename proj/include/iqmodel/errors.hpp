#pragma once

#include <stdexcept>
#include <string>

namespace iqm {

// Base class for every error raised by the library.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameter values (negative rates, probabilities outside [0,1], ...).
class DomainError : public ModelError {
public:
    using ModelError::ModelError;
};

// State space larger than the configured ceiling for dense matrices.
class CapacityExceeded : public ModelError {
public:
    using ModelError::ModelError;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public ModelError {
public:
    using ModelError::ModelError;
};

// Matrices built over different state spaces were combined.
class DimensionMismatch : public ModelError {
public:
    using ModelError::ModelError;
};

// A numerical invariant (row stochasticity, probability bounds) failed.
class NumericalError : public ModelError {
public:
    using ModelError::ModelError;
};

// Power iteration hit its iteration cap without meeting the residual bound.
class NoConvergence : public ModelError {
public:
    using ModelError::ModelError;
};

// An exhaustive search would exceed the configured number of solver calls.
class EvaluationCapExceeded : public ModelError {
public:
    using ModelError::ModelError;
};

// Malformed or inconsistent configuration input.
class ConfigError : public ModelError {
public:
    using ModelError::ModelError;
};

}  // namespace iqm
