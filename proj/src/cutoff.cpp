#include "drmroc/cutoff.hpp"

#include <algorithm>
#include <cmath>

#include "drmroc/errors.hpp"

namespace drmroc {

namespace {

constexpr int kScanPoints = 512;
constexpr double kBisectTol = 1e-10;

double bisect(const DrmFit& fit, double lo, double hi, double glo) {
    // Bisects alpha + beta'q between a bracketing pair until the interval is
    // shorter than the absolute tolerance.
    while (hi - lo > kBisectTol) {
        double mid = 0.5 * (lo + hi);
        double gmid = fit.log_density_ratio(mid);
        if (gmid == 0.0) return mid;
        if ((glo < 0.0) == (gmid < 0.0)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

CutoffSolution solve_cutoff(const DrmFit& fit) {
    const double lo = fit.data.min_value();
    const double hi = fit.data.max_value();
    CutoffSolution solution;

    // Objective for picking among candidates: the fitted Youden index F0 - F1.
    auto [f0, f1] = mele_cdfs(fit);
    auto youden_at = [&](double x) { return f0(x) - f1(x); };

    std::vector<double> grid(kScanPoints);
    for (int k = 0; k < kScanPoints; ++k)
        grid[k] = lo + (hi - lo) * static_cast<double>(k) / (kScanPoints - 1);
    grid.back() = hi;

    std::vector<double> values(kScanPoints);
    for (int k = 0; k < kScanPoints; ++k) values[k] = fit.log_density_ratio(grid[k]);

    for (int k = 0; k < kScanPoints; ++k) {
        if (values[k] == 0.0) {
            if (solution.roots.empty() || grid[k] > solution.roots.back() + kBisectTol)
                solution.roots.push_back(grid[k]);
            continue;
        }
        if (k + 1 < kScanPoints && values[k + 1] != 0.0 &&
            (values[k] < 0.0) != (values[k + 1] < 0.0)) {
            double root = bisect(fit, grid[k], grid[k + 1], values[k]);
            if (solution.roots.empty() || root > solution.roots.back() + kBisectTol)
                solution.roots.push_back(root);
        }
    }

    if (solution.roots.empty()) {
        // No crossing of the log density ratio inside the data range: the
        // fitted groups do not overlap usefully. Fall back to the better
        // endpoint so downstream code still has a cut-off to report.
        solution.degenerate = true;
        solution.cutoff = youden_at(lo) >= youden_at(hi) ? lo : hi;
        solution.warning =
            "log density ratio has no root inside the data range; "
            "using the endpoint with the larger fitted Youden index";
        return solution;
    }

    solution.cutoff = solution.roots.front();
    double best = youden_at(solution.cutoff);
    for (std::size_t i = 1; i < solution.roots.size(); ++i) {
        double j = youden_at(solution.roots[i]);
        if (j > best) {
            best = j;
            solution.cutoff = solution.roots[i];
        }
    }

    // A vanishing slope at the chosen root makes the cut-off ill-determined
    // (the asymptotic pieces divide by it); flag it early.
    double slope = fit.beta().dot(fit.basis.derivative(solution.cutoff));
    if (!std::isfinite(slope) || slope == 0.0) {
        solution.degenerate = true;
        solution.warning = "density ratio slope vanishes at the cut-off";
    }
    return solution;
}

YoudenEstimate estimate_accuracy(const DrmFit& fit, double cutoff) {
    if (!std::isfinite(cutoff)) throw InputError("cutoff must be finite");
    auto [f0, f1] = mele_cdfs(fit);
    double tau = std::clamp(f0(cutoff), 0.0, 1.0);
    double eta = std::clamp(1.0 - f1(cutoff), 0.0, 1.0);
    return YoudenEstimate{cutoff, eta, tau, eta + tau - 1.0};
}

}  // namespace drmroc
