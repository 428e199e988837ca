#include "drmroc/rng.hpp"

#include <algorithm>
#include <cmath>

#include "drmroc/errors.hpp"

namespace drmroc {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ (index * 0xd6e8feb86659fd93ULL + 0x2545f4914f6cdd1dULL));
}

double Rng::uniform() {
    // 53-bit mantissa in (0, 1): offset by half an ulp so 0 is excluded
    std::uint64_t bits = gen_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    cached_normal_ = r * std::sin(kTwoPi * u2);
    has_cached_normal_ = true;
    return r * std::cos(kTwoPi * u2);
}

double Rng::gamma(double shape, double rate) {
    if (shape <= 0.0 || rate <= 0.0) throw InputError("gamma sampler needs shape > 0, rate > 0");
    if (shape < 1.0) {
        // boost small shapes: Gamma(a) = Gamma(a+1) * U^{1/a}
        double g = gamma(shape + 1.0, 1.0);
        return g * std::pow(uniform(), 1.0 / shape) / rate;
    }
    // Marsaglia-Tsang squeeze
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

double Rng::beta(double a, double b) {
    double ga = gamma(a, 1.0);
    double gb = gamma(b, 1.0);
    return ga / (ga + gb);
}

double Rng::lognormal(double mu_log, double var_log) {
    if (var_log < 0.0) throw InputError("lognormal sampler needs var >= 0 on the log scale");
    return std::exp(mu_log + std::sqrt(var_log) * normal());
}

int Rng::uniform_index(int n) {
    if (n <= 0) throw InputError("uniform_index needs n > 0");
    int idx = static_cast<int>(uniform() * n);
    return idx >= n ? n - 1 : idx;
}

std::size_t Rng::discrete(const std::vector<double>& cumulative) {
    if (cumulative.empty()) throw InputError("discrete sampler needs a non-empty table");
    double u = uniform() * cumulative.back();
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) return cumulative.size() - 1;
    return static_cast<std::size_t>(it - cumulative.begin());
}

}  // namespace drmroc
