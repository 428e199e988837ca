#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace drmroc {

/// Invalid user input: malformed files, bad sample sizes, basis domain violations.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Estimation failure in the likelihood optimizer.
/// Carries the last iterate and its gradient norm so callers can diagnose
/// non-convergence versus separation (unbounded likelihood).
class FitError : public std::runtime_error {
public:
    FitError(const std::string& msg, std::vector<double> last_theta,
             double gradient_norm, bool separation)
        : std::runtime_error(msg),
          last_theta(std::move(last_theta)),
          gradient_norm(gradient_norm),
          separation(separation) {}

    std::vector<double> last_theta;
    double gradient_norm;
    bool separation;
};

/// Downstream estimation failure: singular information matrix, degenerate
/// bandwidth, excessive bootstrap failures, and similar.
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace drmroc
