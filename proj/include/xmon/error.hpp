#pragma once

#include <stdexcept>
#include <string>

namespace xmon {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical or numerical input violates a precondition.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A solver or model configuration is unusable (cutoffs, empty chains).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Time integration lost more probability than the accepted drift.
class AccuracyError : public Error {
public:
    using Error::Error;
};

/// The requested evolution was too short to observe the quantity asked for.
class DurationError : public Error {
public:
    using Error::Error;
};

/// Hilbert-space dimension exceeds the dense-diagonalization cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed design-descriptor input, unit strings, or CLI arguments.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace xmon
