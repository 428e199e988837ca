#pragma once

#include "drmroc/el_fit.hpp"
#include "drmroc/weighted_cdf.hpp"

namespace drmroc {

/// Bandwidth rule h = 1.06 n^{-1/5} min(IQR, sigma) with the interquartile
/// range and standard deviation taken from the weighted CDF. Throws
/// EstimationError when the spread is zero (all mass at one point).
double silverman_bandwidth(const WeightedCdf& cdf, int n);

/// Gaussian-kernel smoothing of a weighted CDF: f(x) = sum_k m_k K_h(x - x_k).
struct KernelDensityEstimate {
    WeightedCdf base;
    double bandwidth;

    double operator()(double x) const;
};

/// Averaged fitted density at the cut-off, (1/2){f0(c) + f1(c)}, each group
/// smoothed from its fitted CDF with its own Silverman bandwidth (total n in
/// the rule).
double density_at_cutoff(const DrmFit& fit, double cutoff);

}  // namespace drmroc
