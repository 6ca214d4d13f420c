#pragma once

#include <stdexcept>
#include <string>

namespace homeguard {

/// Raised when input data (logs, model files, instance sets) violates a
/// precondition of the operation it was handed to.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed log text. The message names the line or token at fault.
class ParseError : public DataError {
public:
    using DataError::DataError;
};

/// A configuration value outside its documented domain.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace homeguard
