#include "drmroc/el_fit.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "drmroc/errors.hpp"

namespace drmroc {

namespace {

constexpr double kSeparationNorm = 1e6;

// log(1 - rho + rho e^t), split so both branches stay well conditioned:
// t <= 0 uses log1p(rho expm1(t)); t > 0 factors out e^t.
double log_mixture_denom(double t, double rho) {
    if (t <= 0.0) return std::log1p(rho * std::expm1(t));
    return t + std::log(rho + (1.0 - rho) * std::exp(-t));
}

// rho e^t / (1 - rho + rho e^t), the posterior diseased probability of a
// pooled point with log density ratio t.
double mixture_weight(double t, double rho) {
    if (t <= 0.0) {
        double et = std::exp(t);
        return rho * et / (1.0 - rho + rho * et);
    }
    return rho / (rho + (1.0 - rho) * std::exp(-t));
}

// Columns of Q at every pooled point, healthy block first.
Eigen::MatrixXd design_matrix(const TwoSampleData& data, const BasisSpec& basis) {
    const auto& xs = data.pooled();
    Eigen::MatrixXd q(static_cast<int>(xs.size()), basis.dimension() + 1);
    for (std::size_t i = 0; i < xs.size(); ++i) q.row(static_cast<int>(i)) = basis.eval(xs[i]);
    return q;
}

double dual_value(const Eigen::VectorXd& theta, const Eigen::MatrixXd& q, int n0, double rho) {
    Eigen::VectorXd t = q * theta;
    double value = 0.0;
    for (int i = 0; i < t.size(); ++i) {
        if (i >= n0) value += t[i];
        value -= log_mixture_denom(t[i], rho);
    }
    return value;
}

}  // namespace

double dual_log_likelihood(const Eigen::VectorXd& theta, const TwoSampleData& data,
                           const BasisSpec& basis) {
    require_valid(data, basis);
    return dual_value(theta, design_matrix(data, basis), data.n0(), data.rho());
}

DualEval dual_log_likelihood_eval(const Eigen::VectorXd& theta, const TwoSampleData& data,
                                  const BasisSpec& basis) {
    require_valid(data, basis);
    const Eigen::MatrixXd q = design_matrix(data, basis);
    const int n0 = data.n0();
    const double rho = data.rho();
    const int dim = basis.dimension() + 1;

    DualEval eval;
    eval.value = 0.0;
    eval.gradient = Eigen::VectorXd::Zero(dim);
    eval.hessian = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd t = q * theta;
    for (int i = 0; i < t.size(); ++i) {
        const double w = mixture_weight(t[i], rho);
        if (i >= n0) {
            eval.value += t[i];
            eval.gradient += q.row(i);
        }
        eval.value -= log_mixture_denom(t[i], rho);
        eval.gradient -= w * q.row(i).transpose();
        eval.hessian.noalias() -= (w * (1.0 - w)) * (q.row(i).transpose() * q.row(i));
    }
    return eval;
}

DrmFit fit_drm(const TwoSampleData& data, const BasisSpec& basis,
               const OptimizerSettings& settings) {
    require_valid(data, basis);
    if (settings.max_iterations < 1) throw InputError("max_iterations must be >= 1");
    if (settings.gradient_tolerance <= 0.0) throw InputError("gradient_tolerance must be > 0");

    const Eigen::MatrixXd q = design_matrix(data, basis);
    const int n0 = data.n0();
    const int n = data.n();
    const double rho = data.rho();
    const int dim = basis.dimension() + 1;

    Eigen::VectorXd theta = settings.initial_theta.size() == dim
                                ? settings.initial_theta
                                : Eigen::VectorXd::Zero(dim);

    auto fail = [&](const std::string& msg, double grad_norm, bool separation) -> FitError {
        std::vector<double> last(theta.data(), theta.data() + theta.size());
        return FitError(msg, std::move(last), grad_norm, separation);
    };

    double grad_norm = std::numeric_limits<double>::infinity();
    bool converged = false;
    int iterations = 0;
    for (; iterations < settings.max_iterations; ++iterations) {
        // value/gradient/Hessian at the current iterate
        Eigen::VectorXd t = q * theta;
        double value = 0.0;
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(dim);
        Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < t.size(); ++i) {
            const double w = mixture_weight(t[i], rho);
            if (i >= n0) {
                value += t[i];
                grad += q.row(i);
            }
            value -= log_mixture_denom(t[i], rho);
            grad -= w * q.row(i).transpose();
            hess.noalias() -= (w * (1.0 - w)) * (q.row(i).transpose() * q.row(i));
        }
        grad_norm = grad.norm();
        if (grad_norm <= settings.gradient_tolerance) {
            converged = true;
            break;
        }

        // Newton direction on the concave dual; steepest ascent when the
        // curvature matrix is numerically singular.
        Eigen::VectorXd step;
        bool newton_direction = false;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(-hess);
        if (es.eigenvalues().minCoeff() < 1e-12) {
            step = grad / std::max(grad_norm, 1.0);
        } else {
            step = es.eigenvectors() *
                   es.eigenvalues().cwiseInverse().asDiagonal() *
                   (es.eigenvectors().transpose() * grad);
            newton_direction = true;
        }

        double scale = 1.0;
        bool improved = false;
        for (int half = 0; half <= settings.max_backtracks; ++half) {
            Eigen::VectorXd candidate = theta + scale * step;
            if (dual_value(candidate, q, n0, rho) > value) {
                theta = candidate;
                improved = true;
                break;
            }
            scale *= settings.backtrack_factor;
        }
        if (!improved) {
            // No measurable ascent left. The strict-improvement line search
            // bottoms out once the attainable gain drops below the floating
            // point resolution of the objective, which can happen at any
            // gradient norm when the curvature is large (e.g. an x^2 basis).
            // Accept the iterate when the quadratic model's remaining gain
            // g'(-H)^{-1}g / 2 is below that resolution, or when the gradient
            // itself is already within three decades of the tolerance.
            const double remaining_gain = newton_direction ? 0.5 * grad.dot(step)
                                                           : std::numeric_limits<double>::max();
            if (grad_norm <= 1e3 * settings.gradient_tolerance ||
                remaining_gain <= 1e-11 * (1.0 + std::abs(value))) {
                converged = true;
                break;
            }
            throw fail("line search stalled at gradient norm " + std::to_string(grad_norm),
                       grad_norm, false);
        }
        if (theta.norm() > kSeparationNorm)
            throw fail("separation: likelihood appears unbounded (||theta|| > 1e6)",
                       theta.norm(), true);
    }
    if (!converged && grad_norm > 1e3 * settings.gradient_tolerance)
        throw fail("no convergence after " + std::to_string(settings.max_iterations) +
                       " iterations (gradient norm " + std::to_string(grad_norm) + ")",
                   grad_norm, false);

    // p_ij = n^{-1} / (1 - rho + rho e^{theta'Q}); the two mass constraints
    // hold at the dual optimum up to the gradient tolerance.
    std::vector<double> weights(static_cast<std::size_t>(n));
    double loglik = 0.0;
    Eigen::VectorXd t = q * theta;
    for (int i = 0; i < n; ++i) {
        double log_p = -std::log(static_cast<double>(n)) - log_mixture_denom(t[i], rho);
        weights[static_cast<std::size_t>(i)] = std::exp(log_p);
        loglik += log_p;
        if (i >= n0) loglik += t[i];
    }

    DrmFit fit{std::move(theta), std::move(weights), loglik, data, basis, iterations, grad_norm};
    return fit;
}

double DrmFit::log_density_ratio(double x) const { return theta_hat.dot(basis.eval(x)); }

std::pair<WeightedCdf, WeightedCdf> mele_cdfs(const DrmFit& fit) {
    const auto& xs = fit.data.pooled();
    std::vector<double> mass1(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        mass1[i] = fit.weights[i] * std::exp(fit.log_density_ratio(xs[i]));
    return {WeightedCdf(xs, fit.weights), WeightedCdf(xs, std::move(mass1))};
}

std::pair<WeightedCdf, WeightedCdf> empirical_cdfs(const TwoSampleData& data) {
    std::vector<double> m0(data.healthy().size(), 1.0 / data.n0());
    std::vector<double> m1(data.diseased().size(), 1.0 / data.n1());
    return {WeightedCdf(data.healthy(), std::move(m0)),
            WeightedCdf(data.diseased(), std::move(m1))};
}

}  // namespace drmroc
