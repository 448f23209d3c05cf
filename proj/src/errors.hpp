#pragma once

#include <stdexcept>
#include <string>

namespace sarima {

// Bad arguments or configuration supplied by the caller.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed, inconsistent, or insufficient input data.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: likelihood not computable, no usable fit, singularities.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sarima
