#pragma once

#include <stdexcept>

namespace horadam {

// Bad user-supplied parameters (CLI exit code 2).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested computation exceeds a configured cap (CLI exit code 3).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A property guaranteed by the theory failed to hold on a concrete instance.
struct theorem_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction produced an object that fails its own validation.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace horadam
