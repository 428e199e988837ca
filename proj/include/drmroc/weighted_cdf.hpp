#pragma once

#include <vector>

namespace drmroc {

/// Discrete distribution function: non-negative jump masses at support points,
/// evaluated as a right-continuous step function. Support points may repeat
/// (tied observations keep their own masses). Masses are expected to total 1
/// up to small optimizer tolerance.
class WeightedCdf {
public:
    /// Sorts (support, mass) pairs by support. Throws InputError on length
    /// mismatch, negative mass, or non-finite entries.
    WeightedCdf(std::vector<double> support, std::vector<double> masses);

    /// F(x) = sum of masses at support points <= x.
    double operator()(double x) const;

    /// Left-continuous generalized inverse: Q(u) = inf{x : F(x) >= u}.
    double quantile(double u) const;

    double mean() const;
    double variance() const;  // sum m x^2 - (sum m x)^2

    const std::vector<double>& support() const { return support_; }
    const std::vector<double>& masses() const { return masses_; }
    double total_mass() const;

private:
    std::vector<double> support_;
    std::vector<double> masses_;
    std::vector<double> cumulative_;
};

}  // namespace drmroc
