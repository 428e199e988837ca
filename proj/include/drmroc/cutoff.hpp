#pragma once

#include <string>
#include <vector>

#include "drmroc/el_fit.hpp"

namespace drmroc {

/// Youden-optimal cut-off estimate with plug-in accuracy measures.
struct YoudenEstimate {
    double cutoff;
    double sensitivity;  // eta+ = 1 - F1(c)
    double specificity;  // tau+ = F0(c)
    double youden;       // J = eta+ + tau+ - 1
};

struct CutoffSolution {
    double cutoff;
    std::vector<double> roots;  // every root located in [X_(1), X_(n)]
    bool degenerate = false;    // endpoint fallback or ~zero slope
    std::string warning;        // non-empty when degenerate
};

/// Solves alpha + beta'q(x) = 0 over the observed data range by a 512-point
/// bracket scan plus bisection (absolute tolerance 1e-10 per bracket). With
/// several roots, returns the one maximizing F0(x) - F1(x) under the fitted
/// model. Without any sign change (degenerate fit, e.g. beta ~ 0) falls back
/// to the endpoint maximizing F0 - F1 and sets a warning.
CutoffSolution solve_cutoff(const DrmFit& fit);

/// Plug-in estimates at the cut-off, evaluated right-continuously and clamped
/// to [0, 1] against the ~1e-9 mass-normalization residual of the fit.
YoudenEstimate estimate_accuracy(const DrmFit& fit, double cutoff);

}  // namespace drmroc
