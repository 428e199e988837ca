#include "drmroc/weighted_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "drmroc/errors.hpp"

namespace drmroc {

WeightedCdf::WeightedCdf(std::vector<double> support, std::vector<double> masses) {
    if (support.size() != masses.size())
        throw InputError("weighted CDF: support and mass lengths differ");
    if (support.empty()) throw InputError("weighted CDF: empty support");
    const std::size_t m = support.size();
    for (std::size_t k = 0; k < m; ++k) {
        if (!std::isfinite(support[k]) || !std::isfinite(masses[k]))
            throw InputError("weighted CDF: non-finite entry");
        if (masses[k] < 0.0) throw InputError("weighted CDF: negative mass");
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    support_.resize(m);
    masses_.resize(m);
    cumulative_.resize(m);
    double running = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        support_[k] = support[order[k]];
        masses_[k] = masses[order[k]];
        running += masses_[k];
        cumulative_[k] = running;
    }
}

double WeightedCdf::operator()(double x) const {
    auto it = std::upper_bound(support_.begin(), support_.end(), x);
    if (it == support_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double WeightedCdf::quantile(double u) const {
    if (u <= 0.0) return support_.front();
    auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) return support_.back();
    return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double WeightedCdf::mean() const {
    double s = 0.0;
    for (std::size_t k = 0; k < support_.size(); ++k) s += masses_[k] * support_[k];
    return s;
}

double WeightedCdf::variance() const {
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t k = 0; k < support_.size(); ++k) {
        s1 += masses_[k] * support_[k];
        s2 += masses_[k] * support_[k] * support_[k];
    }
    return s2 - s1 * s1;
}

double WeightedCdf::total_mass() const { return cumulative_.back(); }

}  // namespace drmroc
