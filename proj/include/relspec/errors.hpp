#pragma once

#include <stdexcept>
#include <string>

namespace relspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};

/// A pointwise symbol estimate failed outside the declared tolerance.
struct BoundViolation : Error {
    double xi = 0.0;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    BoundViolation(const std::string& what, double xi_, double value_, double lower_, double upper_)
        : Error(what), xi(xi_), value(value_), lower(lower_), upper(upper_) {}
};

struct GridMismatch : Error {
    using Error::Error;
};

struct DimMismatch : Error {
    using Error::Error;
};

struct QMismatch : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct SingularCore : Error {
    using Error::Error;
};

struct NeumannDivergence : Error {
    using Error::Error;
};

struct BallExit : Error {
    using Error::Error;
};

struct NoContraction : Error {
    using Error::Error;
};

struct SupportOverflow : Error {
    using Error::Error;
};

struct InsufficientLadder : Error {
    using Error::Error;
};

} // namespace relspec
