#pragma once

#include <stdexcept>
#include <string>

namespace plasmon {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonLorentzianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateCouplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidOverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NearDegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Carries the dotted key that failed validation, e.g. "ensemble.count".
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path(path) {}
    std::string path;
};

}  // namespace plasmon
