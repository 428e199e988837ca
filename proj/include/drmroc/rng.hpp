#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace drmroc {

/// Derives the seed of an independent substream from (seed, index).
/// Used so that bootstrap replicate b or simulation replicate l always sees
/// the same stream regardless of thread scheduling.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random generator. All samplers are implemented explicitly
/// (Box-Muller normal, Marsaglia-Tsang gamma, gamma-ratio beta) so that a
/// given seed yields identical draws on every platform; the standard library
/// distributions are implementation-defined and are deliberately not used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on (0, 1); never returns 0 or 1.
    double uniform();

    double normal();

    /// Gamma with shape a > 0 and rate b > 0.
    double gamma(double shape, double rate);

    double beta(double a, double b);

    /// exp(mu + sqrt(var) * Z) with Z standard normal.
    double lognormal(double mu_log, double var_log);

    /// Uniform index in {0, ..., n-1}; used for with-replacement resampling.
    int uniform_index(int n);

    /// Draws from the discrete distribution with the given cumulative masses
    /// (non-decreasing, last entry ~1): returns the first index with
    /// cumulative >= u.
    std::size_t discrete(const std::vector<double>& cumulative);

private:
    std::mt19937_64 gen_;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace drmroc
