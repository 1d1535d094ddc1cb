#pragma once

#include <stdexcept>

namespace relay {

// The instance admits no feasible answer for the requested task
// (e.g. a target sensor no available position covers).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The input exceeds a solver's configured limits (size or time budget).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A result failed a requested validation, e.g. a coverage-degree check.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relay
