#include "drmroc/simulate.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "drmroc/errors.hpp"
#include "drmroc/parallel.hpp"

namespace drmroc {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double family_cdf(Family family, double a, double b, double x) {
    switch (family) {
        case Family::Lognormal:
            if (x <= 0.0) return 0.0;
            return normal_cdf((std::log(x) - a) / std::sqrt(b));
        case Family::Gamma:
            if (x <= 0.0) return 0.0;
            return boost::math::gamma_p(a, b * x);
        case Family::Beta:
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return boost::math::ibeta(a, b, x);
    }
    throw InputError("unknown family");
}

double family_log_pdf(Family family, double a, double b, double x) {
    switch (family) {
        case Family::Lognormal: {
            double z = std::log(x) - a;
            return -std::log(x) - 0.5 * std::log(2.0 * M_PI * b) - z * z / (2.0 * b);
        }
        case Family::Gamma:
            return a * std::log(b) - std::lgamma(a) + (a - 1.0) * std::log(x) - b * x;
        case Family::Beta:
            return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) -
                   (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    }
    throw InputError("unknown family");
}

void check_params(Family family, const std::array<double, 4>& p) {
    for (double v : p)
        if (!std::isfinite(v)) throw InputError("family parameters must be finite");
    if (p[0] <= 0.0 && family != Family::Lognormal)
        throw InputError("shape parameters must be positive");
    if (p[2] <= 0.0 && family != Family::Lognormal)
        throw InputError("shape parameters must be positive");
    if (p[1] <= 0.0 || p[3] <= 0.0)
        throw InputError("second parameters must be positive");
}

// Search bracket covering essentially all mass of both groups.
std::pair<double, double> support_bracket(Family family, const std::array<double, 4>& p) {
    switch (family) {
        case Family::Lognormal: {
            double spread = 8.0 * std::sqrt(std::max(p[1], p[3]));
            return {std::exp(std::min(p[0], p[2]) - spread),
                    std::exp(std::max(p[0], p[2]) + spread)};
        }
        case Family::Gamma: {
            double hi = std::max(p[0] / p[1] + 12.0 * std::sqrt(p[0]) / p[1],
                                 p[2] / p[3] + 12.0 * std::sqrt(p[2]) / p[3]);
            return {1e-12, hi};
        }
        case Family::Beta:
            return {1e-12, 1.0 - 1e-12};
    }
    throw InputError("unknown family");
}

}  // namespace

std::string family_name(Family family) {
    switch (family) {
        case Family::Lognormal: return "lognormal";
        case Family::Gamma: return "gamma";
        case Family::Beta: return "beta";
    }
    throw InputError("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "lognormal") return Family::Lognormal;
    if (name == "gamma") return Family::Gamma;
    if (name == "beta") return Family::Beta;
    throw InputError("unknown family '" + name + "' (expected lognormal, gamma, or beta)");
}

std::array<double, 2> drm_log_basis_coefficients(Family family,
                                                 const std::array<double, 4>& params) {
    check_params(family, params);
    const double a0 = params[0], b0 = params[1], a1 = params[2], b1 = params[3];
    if (b0 != b1)
        throw InputError(
            "the log(x) basis is exact only when the two second parameters agree");
    switch (family) {
        case Family::Lognormal:
            return {(a0 * a0 - a1 * a1) / (2.0 * b0), (a1 - a0) / b0};
        case Family::Gamma:
            return {(a1 - a0) * std::log(b0) + std::lgamma(a0) - std::lgamma(a1), a1 - a0};
        case Family::Beta: {
            double lb0 = std::lgamma(a0) + std::lgamma(b0) - std::lgamma(a0 + b0);
            double lb1 = std::lgamma(a1) + std::lgamma(b1) - std::lgamma(a1 + b1);
            return {lb0 - lb1, a1 - a0};
        }
    }
    throw InputError("unknown family");
}

TrueValues true_values(Family family, const std::array<double, 4>& params) {
    check_params(family, params);
    const double a0 = params[0], b0 = params[1], a1 = params[2], b1 = params[3];

    double cutoff;
    if (b0 == b1) {
        // Density ratio is exp{alpha + beta log x}: single crossing in closed form.
        auto [alpha, beta] = drm_log_basis_coefficients(family, params);
        if (beta == 0.0) throw EstimationError("the two groups coincide; no crossing");
        cutoff = std::exp(-alpha / beta);
    } else {
        auto [lo, hi] = support_bracket(family, params);
        auto diff = [&](double x) {
            return family_log_pdf(family, a1, b1, x) - family_log_pdf(family, a0, b0, x);
        };
        // Log-spaced scan (supports are positive), bisection per sign change,
        // then keep the crossing with the largest Youden index.
        constexpr int kScan = 4096;
        std::vector<double> roots;
        double prev_x = lo;
        double prev_g = diff(lo);
        for (int k = 1; k < kScan; ++k) {
            double x = lo * std::pow(hi / lo, static_cast<double>(k) / (kScan - 1));
            double g = diff(x);
            if ((prev_g < 0.0) != (g < 0.0)) {
                double a = prev_x, b = x, ga = prev_g;
                for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, b); ++it) {
                    double mid = 0.5 * (a + b);
                    double gm = diff(mid);
                    if ((ga < 0.0) == (gm < 0.0)) {
                        a = mid;
                        ga = gm;
                    } else {
                        b = mid;
                    }
                }
                roots.push_back(0.5 * (a + b));
            }
            prev_x = x;
            prev_g = g;
        }
        if (roots.empty()) throw EstimationError("densities do not cross inside the support");
        cutoff = roots.front();
        double best = -2.0;
        for (double r : roots) {
            double j = family_cdf(family, a0, b0, r) - family_cdf(family, a1, b1, r);
            if (j > best) {
                best = j;
                cutoff = r;
            }
        }
    }

    double tau = family_cdf(family, a0, b0, cutoff);
    double eta = 1.0 - family_cdf(family, a1, b1, cutoff);
    return TrueValues{cutoff, eta, tau, eta + tau - 1.0};
}

Scenario make_scenario(Family family, double j_star, int n0, int n1) {
    if (n0 < 2 || n1 < 2) throw InputError("group sizes must be at least 2");
    int tier = static_cast<int>(std::lround(j_star * 10.0));
    if (std::abs(j_star * 10.0 - tier) > 1e-9 || (tier != 3 && tier != 5 && tier != 7))
        throw InputError("built-in scenarios exist for J* in {0.3, 0.5, 0.7}");

    std::array<double, 4> params{};
    switch (family) {
        case Family::Lognormal:
            params = {0.0, 1.0, tier == 3 ? 0.77 : tier == 5 ? 1.35 : 2.07, 1.0};
            break;
        case Family::Gamma:
            params = {1.5, 1.0, tier == 3 ? 2.47 : tier == 5 ? 3.39 : 4.81, 1.0};
            break;
        case Family::Beta:
            params = {1.5, 3.0, tier == 3 ? 2.77 : tier == 5 ? 4.25 : 7.09, 3.0};
            break;
    }
    return Scenario{family,
                    tier / 10.0,
                    params,
                    true_values(family, params),
                    n0,
                    n1,
                    BasisSpec({BasisTerm::LogX})};
}

TwoSampleData draw_scenario_data(const Scenario& scenario, Rng& rng) {
    std::vector<double> healthy(static_cast<std::size_t>(scenario.n0));
    std::vector<double> diseased(static_cast<std::size_t>(scenario.n1));
    auto draw = [&](double a, double b) {
        switch (scenario.family) {
            case Family::Lognormal: return rng.lognormal(a, b);
            case Family::Gamma: return rng.gamma(a, b);
            case Family::Beta: return rng.beta(a, b);
        }
        throw InputError("unknown family");
    };
    const auto& p = scenario.params;
    for (auto& v : healthy) v = draw(p[0], p[1]);
    for (auto& v : diseased) v = draw(p[2], p[3]);
    return TwoSampleData(std::move(healthy), std::move(diseased));
}

SimulationReport run_simulation(const Scenario& scenario, int L,
                                const SimulationOptions& options, std::uint64_t seed) {
    if (L < 1) throw InputError("replicate count must be at least 1");
    const bool with_regions = options.bootstrap > 0 && options.kind.has_value();
    if (with_regions && options.bootstrap < 100)
        throw InputError("bootstrap size must be at least 100 (or 0 to skip regions)");
    if (with_regions && !(options.level > 0.0 && options.level < 1.0))
        throw InputError("confidence level must lie in (0, 1)");

    // Slot layout per replicate: eta, tau, covered (0/1), area.
    std::vector<std::optional<std::array<double, 4>>> slots(static_cast<std::size_t>(L));
    parallel_for(L, options.threads, [&](int l) {
        Rng rng(substream_seed(seed, 2ull * static_cast<std::uint64_t>(l)));
        try {
            TwoSampleData data = draw_scenario_data(scenario, rng);
            DrmFit fit = fit_drm(data, scenario.basis);
            CutoffSolution cut = solve_cutoff(fit);
            YoudenEstimate est = estimate_accuracy(fit, cut.cutoff);
            std::array<double, 4> rec{est.sensitivity, est.specificity,
                                      std::numeric_limits<double>::quiet_NaN(),
                                      std::numeric_limits<double>::quiet_NaN()};
            if (with_regions) {
                BootstrapCovariance boot = bootstrap_sigma(
                    data, scenario.basis, options.bootstrap,
                    substream_seed(seed, 2ull * static_cast<std::uint64_t>(l) + 1ull), 1);
                ConfidenceRegion region =
                    *options.kind == RegionKind::Wald
                        ? wald_region(est, boot.sigma, data.n(), options.level)
                        : logit_region(est, boot.sigma, data.n(), options.level);
                rec[2] = region_contains(region, scenario.truth.sensitivity,
                                         scenario.truth.specificity)
                             ? 1.0
                             : 0.0;
                rec[3] = region_area(region);
            }
            slots[static_cast<std::size_t>(l)] = rec;
        } catch (const std::runtime_error&) {
            // dropped and counted below
        }
    });

    SimulationReport report;
    report.distribution = family_name(scenario.family);
    report.n0 = scenario.n0;
    report.n1 = scenario.n1;
    report.j_star = scenario.j_star;
    report.replicates = L;
    report.seed = seed;

    double sum_eta = 0.0, sum_tau = 0.0, se_eta = 0.0, se_tau = 0.0;
    double covered = 0.0, area_sum = 0.0;
    int used = 0;
    for (const auto& slot : slots) {
        if (!slot) {
            ++report.failures;
            continue;
        }
        ++used;
        const auto& r = *slot;
        sum_eta += r[0];
        sum_tau += r[1];
        se_eta += (r[0] - scenario.truth.sensitivity) * (r[0] - scenario.truth.sensitivity);
        se_tau += (r[1] - scenario.truth.specificity) * (r[1] - scenario.truth.specificity);
        if (with_regions) {
            covered += r[2];
            area_sum += r[3];
        }
    }
    report.valid = 50 * report.failures <= L;
    if (used == 0) {
        report.valid = false;
        report.rb_eta_pct = report.mse_eta_x100 = report.rb_tau_pct = report.mse_tau_x100 =
            std::numeric_limits<double>::quiet_NaN();
        report.cp_pct = report.acr_x100 = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    report.rb_eta_pct =
        100.0 * (sum_eta / used - scenario.truth.sensitivity) / scenario.truth.sensitivity;
    report.rb_tau_pct =
        100.0 * (sum_tau / used - scenario.truth.specificity) / scenario.truth.specificity;
    report.mse_eta_x100 = 100.0 * se_eta / used;
    report.mse_tau_x100 = 100.0 * se_tau / used;
    if (with_regions) {
        report.cp_pct = 100.0 * covered / used;
        report.acr_x100 = 100.0 * area_sum / used;
    } else {
        report.cp_pct = std::numeric_limits<double>::quiet_NaN();
        report.acr_x100 = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

}  // namespace drmroc
