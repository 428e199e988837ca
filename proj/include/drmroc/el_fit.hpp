#pragma once

#include <Eigen/Dense>
#include <utility>

#include "drmroc/basis.hpp"
#include "drmroc/data.hpp"
#include "drmroc/weighted_cdf.hpp"

namespace drmroc {

struct OptimizerSettings {
    int max_iterations = 200;
    double gradient_tolerance = 1e-9;
    Eigen::VectorXd initial_theta;  // empty = zeros
    double backtrack_factor = 0.5;
    int max_backtracks = 40;
};

struct DualEval {
    double value;
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;
};

/// Profiled (dual) empirical log-likelihood of the two-sample density ratio
/// model:
///   l(theta) = sum_{diseased} theta'Q(x) - sum_{pooled} log{1 - rho + rho e^{theta'Q(x)}}
/// with rho = n1/n. Concave in theta with l(0) = 0. The log term is computed
/// through a split that stays finite for arbitrarily large |theta'Q|.
double dual_log_likelihood(const Eigen::VectorXd& theta, const TwoSampleData& data,
                           const BasisSpec& basis);

/// Value plus analytic gradient and Hessian:
///   grad = sum_{diseased} Q - sum_{pooled} w(x) Q,
///   hess = -sum_{pooled} w(x){1 - w(x)} Q Q'
/// where w(x) = rho e^{theta'Q} / (1 - rho + rho e^{theta'Q}) is the posterior
/// probability that a pooled point is diseased.
DualEval dual_log_likelihood_eval(const Eigen::VectorXd& theta, const TwoSampleData& data,
                                  const BasisSpec& basis);

/// Maximum empirical likelihood fit of the density ratio model.
struct DrmFit {
    Eigen::VectorXd theta_hat;     // (alpha, beta...) of length p + 1
    std::vector<double> weights;   // baseline masses p_ij, pooled layout
    double loglik;                 // full EL log-likelihood at the maximum
    TwoSampleData data;
    BasisSpec basis;
    int iterations;
    double gradient_norm;

    double alpha() const { return theta_hat[0]; }
    Eigen::VectorXd beta() const { return theta_hat.tail(theta_hat.size() - 1); }

    /// alpha + beta' q(x), the sign of log{f1(x)/f0(x)} under the fit.
    double log_density_ratio(double x) const;
};

/// Newton's method with backtracking on the concave dual, steepest-ascent
/// fallback when the Hessian is numerically singular. Recovers the weights as
///   p_ij = n^{-1} / {1 - rho + rho e^{theta'Q(X_ij)}}.
/// Throws FitError on non-convergence or separation (diverging ||theta||),
/// InputError on invalid data/basis combinations.
DrmFit fit_drm(const TwoSampleData& data, const BasisSpec& basis,
               const OptimizerSettings& settings = {});

/// Fitted distribution functions: F0 places mass p_ij at X_ij, F1 places
/// p_ij exp{theta'Q(X_ij)}.
std::pair<WeightedCdf, WeightedCdf> mele_cdfs(const DrmFit& fit);

/// Per-group empirical distribution functions with masses 1/n0 and 1/n1.
std::pair<WeightedCdf, WeightedCdf> empirical_cdfs(const TwoSampleData& data);

}  // namespace drmroc
