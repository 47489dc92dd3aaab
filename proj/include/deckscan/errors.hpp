#pragma once

#include <stdexcept>
#include <string>

namespace deckscan {

/// Non-finite or otherwise malformed operand.
struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Geometry that makes a computation ill-posed (e.g. zero displacement
/// along an axis when selecting displacement-scaled gains).
struct degenerate_geometry_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct planning_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct simulation_diverged_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct out_of_bounds_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace deckscan
