#pragma once

#include <stdexcept>
#include <string>

namespace entbounds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    double violation;
    explicit NotHermitian(double v)
        : Error("NotHermitian: max |M - M^dag| entry = " + std::to_string(v)),
          violation(v) {}
};

struct NotPositive : Error {
    double violation;
    explicit NotPositive(double v)
        : Error("NotPositive: most negative eigenvalue = " + std::to_string(v)),
          violation(v) {}
};

struct TraceNotOne : Error {
    double violation;
    explicit TraceNotOne(double v)
        : Error("TraceNotOne: |Tr M - 1| = " + std::to_string(v)), violation(v) {}
};

struct NotNormalized : Error {
    double violation;
    explicit NotNormalized(double v)
        : Error("NotNormalized: |norm^2 - 1| = " + std::to_string(v)),
          violation(v) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct RankMismatch : Error {
    using Error::Error;
};

struct ReconstructionFailure : Error {
    using Error::Error;
};

struct NumericalBreakdown : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace entbounds
