#pragma once

#include <stdexcept>
#include <string>

namespace ehvi {

// Error hierarchy. Every library failure derives from ehvi::Error so callers
// can catch broadly, while the CLI maps the concrete kinds to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vectors, boxes or beliefs with mismatching numbers of objectives.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A front contains a weakly dominated pair or a duplicate.
class InvalidFrontError : public Error {
public:
    using Error::Error;
};

// A front point is not strictly better than the reference point.
class ReferenceBoundError : public Error {
public:
    using Error::Error;
};

// Non-finite coordinates, non-positive standard deviations, bad sample counts.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Backend restricted to a fixed number of objectives (clm3, 2-D quadrature).
class UnsupportedDimensionError : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    using Error::Error;
};

class ExhaustedError : public Error {
public:
    using Error::Error;
};

}  // namespace ehvi
