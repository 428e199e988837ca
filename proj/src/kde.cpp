#include "drmroc/kde.hpp"

#include <cmath>

#include "drmroc/errors.hpp"

namespace drmroc {

namespace {
const double kInvSqrt2Pi = 0.3989422804014326779399461;
}

double silverman_bandwidth(const WeightedCdf& cdf, int n) {
    if (n < 2) throw InputError("bandwidth rule needs n >= 2");
    double iqr = cdf.quantile(0.75) - cdf.quantile(0.25);
    double sd = std::sqrt(cdf.variance());
    double spread = std::min(iqr, sd);
    if (!(spread > 0.0))
        throw EstimationError("cannot smooth a distribution with zero spread");
    return 1.06 * spread * std::pow(static_cast<double>(n), -0.2);
}

double KernelDensityEstimate::operator()(double x) const {
    const auto& support = base.support();
    const auto& masses = base.masses();
    double total = 0.0;
    for (std::size_t k = 0; k < support.size(); ++k) {
        double z = (x - support[k]) / bandwidth;
        total += masses[k] * std::exp(-0.5 * z * z);
    }
    return total * kInvSqrt2Pi / bandwidth;
}

double density_at_cutoff(const DrmFit& fit, double cutoff) {
    auto [f0, f1] = mele_cdfs(fit);
    const int n = fit.data.n();
    KernelDensityEstimate k0{f0, silverman_bandwidth(f0, n)};
    KernelDensityEstimate k1{f1, silverman_bandwidth(f1, n)};
    return 0.5 * (k0(cutoff) + k1(cutoff));
}

}  // namespace drmroc
