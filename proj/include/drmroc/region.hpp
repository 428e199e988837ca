#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "drmroc/cutoff.hpp"
#include "drmroc/el_fit.hpp"

namespace drmroc {

/// Building blocks of the asymptotic covariance of (eta+, tau+).
/// With w(x) the posterior diseased probability at the fitted theta:
///   b0 = -sum_{X <= c} p_ij w(X) Q(X)'           (below-cut-off moment)
///   b1 = f_bar Q(c)' / (beta' q'(c))             (cut-off sensitivity term)
///   b2 = sum p_ij w(X) Q(X) Q(X)'                (information-type matrix)
/// and h is the 2 x (p+3) Jacobian mapping the influence components onto
/// (eta+, tau+); its trailing 2x2 block is [[0, -1], [1, 0]].
struct AsymptoticPieces {
    Eigen::RowVectorXd b0;
    Eigen::RowVectorXd b1;
    Eigen::MatrixXd b2;
    Eigen::MatrixXd h;
    double f_bar;
};

/// Requires a non-degenerate fit: throws EstimationError when b2 is not
/// positive definite or when beta' q'(c) vanishes.
AsymptoticPieces compute_pieces(const DrmFit& fit, double cutoff, double f_bar);

struct BootstrapCovariance {
    Eigen::Matrix2d sigma;  // n * cov of bootstrap (eta+, tau+) replicates
    int replicates_used = 0;
    int failures = 0;
};

/// Within-group nonparametric bootstrap of the full estimator. Replicate b
/// draws n0 healthy and n1 diseased values with replacement (stream derived
/// from (seed, b)), refits, and re-estimates (eta+, tau+). Failed replicates
/// are dropped and counted; more than 5% failures raises EstimationError.
/// Requires B >= 100. Results do not depend on the thread count.
BootstrapCovariance bootstrap_sigma(const TwoSampleData& data, const BasisSpec& basis,
                                    int B, std::uint64_t seed, int threads = 1);

enum class RegionKind { Wald, Logit };

std::string region_kind_name(RegionKind kind);
RegionKind region_kind_from_name(const std::string& name);

/// Elliptical (Wald) or logit-transformed confidence region for (eta+, tau+).
/// The defining inequality is n d' S^{-1} d <= chi2 with d and S in the native
/// space of the kind; chi2 = -2 log(gamma) is the chi-square(2) quantile.
struct ConfidenceRegion {
    Eigen::Vector2d center;      // (eta+, tau+)
    Eigen::Matrix2d sigma_hat;   // covariance on the original scale
    int n = 0;
    double level = 0.95;         // 1 - gamma
    RegionKind kind = RegionKind::Logit;
    std::vector<std::array<double, 2>> boundary;  // traced (eta, tau) polygon

    double chi_square() const;
};

/// Wald region {mu : n (mu_hat - mu)' Sigma^{-1} (mu_hat - mu) <= chi2};
/// boundary traced by 2048 points through the symmetric square root of Sigma.
ConfidenceRegion wald_region(const YoudenEstimate& est, const Eigen::Matrix2d& sigma,
                             int n, double level);

/// Region built on logit(eta), logit(tau) with Sigma_logit = M Sigma M,
/// M = diag(1/{eta(1-eta)}, 1/{tau(1-tau)}). The boundary is traced in logit
/// space and mapped back, so it stays inside (0,1)^2. Requires the center to
/// be strictly inside (0,1)^2.
ConfidenceRegion logit_region(const YoudenEstimate& est, const Eigen::Matrix2d& sigma,
                              int n, double level);

/// Analytic ellipse area pi chi2 sqrt(det Sigma)/n for the Wald kind,
/// shoelace area of the traced polygon for the logit kind.
double region_area(const ConfidenceRegion& region);

/// Evaluates the defining quadratic form of the region at mu = (eta, tau).
/// For the logit kind, points outside (0,1)^2 are never contained.
bool region_contains(const ConfidenceRegion& region, double eta, double tau);

}  // namespace drmroc
