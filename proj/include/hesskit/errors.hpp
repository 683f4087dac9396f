#pragma once

#include <stdexcept>
#include <string>

namespace hesskit {

// Bad inputs at the API boundary: preconditions, shapes, parse failures.
struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ShapeMismatch : InvalidArgument {
    explicit ShapeMismatch(const std::string& msg) : InvalidArgument(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver breakdowns: non-convergence, divergence, singular systems.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hesskit
