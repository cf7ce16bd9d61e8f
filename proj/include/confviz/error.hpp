#pragma once

#include <stdexcept>
#include <string>

namespace confviz {

// Base of every error the library throws. The CLI maps ParameterError to
// exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the documented domain of an operation (bad family
// parameters, invalid bipartition, wrong block size, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Two vertices share a neighbourhood (graph) or two neighbour planes coincide
// (polytope).
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

// Search would exceed the documented scale of the isomorphism engine.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Collinear or coincident input where a circle or plane must be determined.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

class ConcyclicityError : public Error {
public:
    using Error::Error;
};

class DistinctnessError : public Error {
public:
    using Error::Error;
};

class SamplingError : public Error {
public:
    using Error::Error;
};

class PolePlacementError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_residual)
        : Error(what), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

// Malformed JSON artifact.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace confviz
