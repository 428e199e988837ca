#include "drmroc/region.hpp"

#include <cmath>
#include <optional>

#include "drmroc/errors.hpp"
#include "drmroc/parallel.hpp"
#include "drmroc/rng.hpp"

namespace drmroc {

namespace {

constexpr int kBoundaryPoints = 2048;

double posterior_diseased(double t, double rho) {
    if (t <= 0.0) {
        double et = std::exp(t);
        return rho * et / (1.0 - rho + rho * et);
    }
    return rho / (rho + (1.0 - rho) * std::exp(-t));
}

double logit(double v) { return std::log(v / (1.0 - v)); }
double expit(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

void check_level(double level) {
    if (!(level > 0.0 && level < 1.0)) throw InputError("confidence level must lie in (0, 1)");
}

// Symmetric square root of a 2x2 covariance; throws when not positive definite.
Eigen::Matrix2d matrix_sqrt(const Eigen::Matrix2d& sigma) {
    if (!sigma.allFinite()) throw EstimationError("covariance matrix has non-finite entries");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(sigma);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw EstimationError("covariance matrix is not positive definite");
    return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
           es.eigenvectors().transpose();
}

double quad_form(const Eigen::Matrix2d& sigma, const Eigen::Vector2d& d) {
    return d.dot(sigma.llt().solve(d));
}

Eigen::Matrix2d logit_scale(const Eigen::Vector2d& center) {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(0, 0) = 1.0 / (center[0] * (1.0 - center[0]));
    m(1, 1) = 1.0 / (center[1] * (1.0 - center[1]));
    return m;
}

}  // namespace

AsymptoticPieces compute_pieces(const DrmFit& fit, double cutoff, double f_bar) {
    const auto& xs = fit.data.pooled();
    const double rho = fit.data.rho();
    const int dim = fit.basis.dimension() + 1;

    AsymptoticPieces pieces;
    pieces.f_bar = f_bar;
    pieces.b0 = Eigen::RowVectorXd::Zero(dim);
    pieces.b2 = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Eigen::VectorXd q = fit.basis.eval(xs[i]);
        double w = fit.weights[i] * posterior_diseased(fit.theta_hat.dot(q), rho);
        if (xs[i] <= cutoff) pieces.b0 -= w * q.transpose();
        pieces.b2.noalias() += w * (q * q.transpose());
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pieces.b2);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw EstimationError("information-type matrix is not positive definite");

    double slope = fit.beta().dot(fit.basis.derivative(cutoff));
    if (!std::isfinite(slope) || slope == 0.0)
        throw EstimationError("density ratio slope vanishes at the cut-off");
    pieces.b1 = (f_bar / slope) * fit.basis.eval(cutoff).transpose();

    Eigen::MatrixXd b2_inv = es.eigenvectors() *
                             es.eigenvalues().cwiseInverse().asDiagonal() *
                             es.eigenvectors().transpose();
    pieces.h = Eigen::MatrixXd::Zero(2, dim + 2);
    pieces.h.block(0, 0, 1, dim) =
        (pieces.b0 / rho + pieces.b1 / (1.0 - rho)) * b2_inv;
    pieces.h.block(1, 0, 1, dim) = ((pieces.b0 - pieces.b1) / (1.0 - rho)) * b2_inv;
    pieces.h(0, dim) = 0.0;
    pieces.h(0, dim + 1) = -1.0;
    pieces.h(1, dim) = 1.0;
    pieces.h(1, dim + 1) = 0.0;
    return pieces;
}

BootstrapCovariance bootstrap_sigma(const TwoSampleData& data, const BasisSpec& basis,
                                    int B, std::uint64_t seed, int threads) {
    if (B < 100) throw InputError("bootstrap size must be at least 100");
    const auto& healthy = data.healthy();
    const auto& diseased = data.diseased();
    const int n0 = data.n0();
    const int n1 = data.n1();

    std::vector<std::optional<std::array<double, 2>>> slots(static_cast<std::size_t>(B));
    parallel_for(B, threads, [&](int b) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(b)));
        std::vector<double> h(static_cast<std::size_t>(n0));
        std::vector<double> d(static_cast<std::size_t>(n1));
        for (auto& v : h) v = healthy[static_cast<std::size_t>(rng.uniform_index(n0))];
        for (auto& v : d) v = diseased[static_cast<std::size_t>(rng.uniform_index(n1))];
        try {
            TwoSampleData resampled(std::move(h), std::move(d));
            DrmFit fit = fit_drm(resampled, basis);
            CutoffSolution cut = solve_cutoff(fit);
            YoudenEstimate est = estimate_accuracy(fit, cut.cutoff);
            slots[static_cast<std::size_t>(b)] = {est.sensitivity, est.specificity};
        } catch (const std::runtime_error&) {
            // dropped and counted below
        }
    });

    BootstrapCovariance out;
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (const auto& slot : slots) {
        if (!slot) {
            ++out.failures;
            continue;
        }
        ++out.replicates_used;
        mean += Eigen::Vector2d((*slot)[0], (*slot)[1]);
    }
    if (out.failures > B / 20)
        throw EstimationError("more than 5% of bootstrap replicates failed to refit (" +
                              std::to_string(out.failures) + " of " + std::to_string(B) + ")");
    if (out.replicates_used < 2)
        throw EstimationError("bootstrap produced fewer than 2 usable replicates");
    mean /= out.replicates_used;

    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const auto& slot : slots) {
        if (!slot) continue;
        Eigen::Vector2d dev = Eigen::Vector2d((*slot)[0], (*slot)[1]) - mean;
        cov += dev * dev.transpose();
    }
    cov /= (out.replicates_used - 1);
    out.sigma = static_cast<double>(data.n()) * cov;
    return out;
}

std::string region_kind_name(RegionKind kind) {
    return kind == RegionKind::Wald ? "wald" : "logit";
}

RegionKind region_kind_from_name(const std::string& name) {
    if (name == "wald") return RegionKind::Wald;
    if (name == "logit") return RegionKind::Logit;
    throw InputError("unknown region kind '" + name + "' (expected wald or logit)");
}

double ConfidenceRegion::chi_square() const { return -2.0 * std::log(1.0 - level); }

ConfidenceRegion wald_region(const YoudenEstimate& est, const Eigen::Matrix2d& sigma,
                             int n, double level) {
    check_level(level);
    if (n < 1) throw InputError("sample size must be positive");
    ConfidenceRegion region;
    region.center = Eigen::Vector2d(est.sensitivity, est.specificity);
    region.sigma_hat = sigma;
    region.n = n;
    region.level = level;
    region.kind = RegionKind::Wald;

    Eigen::Matrix2d half = matrix_sqrt(sigma) * std::sqrt(region.chi_square() / n);
    region.boundary.resize(kBoundaryPoints);
    for (int k = 0; k < kBoundaryPoints; ++k) {
        double angle = 2.0 * M_PI * k / kBoundaryPoints;
        Eigen::Vector2d p = region.center + half * Eigen::Vector2d(std::cos(angle), std::sin(angle));
        region.boundary[static_cast<std::size_t>(k)] = {p[0], p[1]};
    }
    return region;
}

ConfidenceRegion logit_region(const YoudenEstimate& est, const Eigen::Matrix2d& sigma,
                              int n, double level) {
    check_level(level);
    if (n < 1) throw InputError("sample size must be positive");
    ConfidenceRegion region;
    region.center = Eigen::Vector2d(est.sensitivity, est.specificity);
    region.sigma_hat = sigma;
    region.n = n;
    region.level = level;
    region.kind = RegionKind::Logit;
    if (!(region.center.minCoeff() > 0.0 && region.center.maxCoeff() < 1.0))
        throw EstimationError(
            "logit region needs sensitivity and specificity strictly inside (0, 1)");

    Eigen::Matrix2d m = logit_scale(region.center);
    Eigen::Matrix2d half = matrix_sqrt(m * sigma * m) * std::sqrt(region.chi_square() / n);
    Eigen::Vector2d z(logit(region.center[0]), logit(region.center[1]));
    region.boundary.resize(kBoundaryPoints);
    for (int k = 0; k < kBoundaryPoints; ++k) {
        double angle = 2.0 * M_PI * k / kBoundaryPoints;
        Eigen::Vector2d p = z + half * Eigen::Vector2d(std::cos(angle), std::sin(angle));
        region.boundary[static_cast<std::size_t>(k)] = {expit(p[0]), expit(p[1])};
    }
    return region;
}

double region_area(const ConfidenceRegion& region) {
    if (region.kind == RegionKind::Wald) {
        double det = region.sigma_hat.determinant();
        if (det < 0.0) throw EstimationError("covariance matrix has negative determinant");
        return M_PI * region.chi_square() * std::sqrt(det) / region.n;
    }
    // Shoelace on the traced polygon; the boundary is stored unclosed.
    const auto& b = region.boundary;
    double twice = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const auto& p = b[k];
        const auto& q = b[(k + 1) % b.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return std::abs(twice) / 2.0;
}

bool region_contains(const ConfidenceRegion& region, double eta, double tau) {
    if (region.kind == RegionKind::Wald) {
        Eigen::Vector2d d = region.center - Eigen::Vector2d(eta, tau);
        return region.n * quad_form(region.sigma_hat, d) <= region.chi_square();
    }
    if (!(eta > 0.0 && eta < 1.0 && tau > 0.0 && tau < 1.0)) return false;
    Eigen::Matrix2d m = logit_scale(region.center);
    Eigen::Vector2d d(logit(region.center[0]) - logit(eta),
                      logit(region.center[1]) - logit(tau));
    return region.n * quad_form(m * region.sigma_hat * m, d) <= region.chi_square();
}

}  // namespace drmroc
