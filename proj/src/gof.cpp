#include "drmroc/gof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "drmroc/errors.hpp"
#include "drmroc/parallel.hpp"
#include "drmroc/rng.hpp"
#include "drmroc/weighted_cdf.hpp"

namespace drmroc {

namespace {

// sup_x |F(x) - G(x)| for two step functions that only jump at pooled data
// points: the supremum is attained either at a point or just before one, so
// tracking the running values of both CDFs over the sorted distinct points
// covers every candidate.
double sup_distance(const WeightedCdf& f, const WeightedCdf& g,
                    const std::vector<double>& points) {
    std::vector<double> distinct(points);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    double sup = 0.0;
    double f_prev = 0.0;
    double g_prev = 0.0;
    for (double x : distinct) {
        sup = std::max(sup, std::abs(f_prev - g_prev));  // value just before x
        f_prev = f(x);
        g_prev = g(x);
        sup = std::max(sup, std::abs(f_prev - g_prev));  // value at x
    }
    return sup;
}

}  // namespace

GofStatistic gof_statistic(const DrmFit& fit) {
    auto [fit0, fit1] = mele_cdfs(fit);
    auto [emp0, emp1] = empirical_cdfs(fit.data);
    const auto& points = fit.data.pooled();
    return GofStatistic{sup_distance(fit0, emp0, points), sup_distance(fit1, emp1, points)};
}

GofTest gof_bootstrap_pvalue(const TwoSampleData& data, const BasisSpec& basis, int B,
                             std::uint64_t seed, int threads) {
    if (B < 200) throw InputError("goodness-of-fit bootstrap size must be at least 200");
    DrmFit fit = fit_drm(data, basis);
    GofStatistic observed = gof_statistic(fit);
    auto [fit0, fit1] = mele_cdfs(fit);
    const int n0 = data.n0();
    const int n1 = data.n1();

    std::vector<std::optional<double>> slots(static_cast<std::size_t>(B));
    parallel_for(B, threads, [&](int b) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(b)));
        std::vector<double> h(static_cast<std::size_t>(n0));
        std::vector<double> d(static_cast<std::size_t>(n1));
        for (auto& v : h) v = fit0.quantile(rng.uniform());
        for (auto& v : d) v = fit1.quantile(rng.uniform());
        try {
            TwoSampleData resampled(std::move(h), std::move(d));
            DrmFit refit = fit_drm(resampled, basis);
            slots[static_cast<std::size_t>(b)] = gof_statistic(refit).delta_n0;
        } catch (const std::runtime_error&) {
            // dropped and counted below
        }
    });

    GofTest test;
    test.observed = observed;
    int exceed = 0;
    for (const auto& slot : slots) {
        if (!slot) {
            ++test.failures;
            continue;
        }
        ++test.replicates_used;
        if (*slot >= observed.delta_n0) ++exceed;
    }
    if (test.failures > B / 20)
        throw EstimationError("more than 5% of null replicates failed to refit (" +
                              std::to_string(test.failures) + " of " + std::to_string(B) + ")");
    test.p_value = (1.0 + exceed) / (test.replicates_used + 1.0);
    return test;
}

InformationCriteria information_criteria(const DrmFit& fit) {
    const int params = fit.basis.dimension() + 1;
    return InformationCriteria{-2.0 * fit.loglik + 2.0 * params,
                               -2.0 * fit.loglik + params * std::log(fit.data.n())};
}

std::vector<CandidateResult> select_basis(const TwoSampleData& data,
                                          const std::vector<BasisSpec>& candidates,
                                          const SelectOptions& options) {
    if (candidates.empty()) throw InputError("candidate list is empty");
    std::vector<CandidateResult> table;
    table.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        CandidateResult row{candidates[i], false, 0.0, 0.0, std::nullopt, 0, ""};
        try {
            ValidationReport report = validate(data, candidates[i]);
            if (!report.ok()) throw InputError(report.issues.front());
            DrmFit fit = fit_drm(data, candidates[i]);
            InformationCriteria ic = information_criteria(fit);
            row.aic = ic.aic;
            row.bic = ic.bic;
            row.ok = true;
            if (options.gof_bootstrap > 0)
                row.gof_p = gof_bootstrap_pvalue(data, candidates[i], options.gof_bootstrap,
                                                 substream_seed(options.seed, i), options.threads)
                                .p_value;
        } catch (const std::runtime_error& err) {
            row.ok = false;
            row.error = err.what();
        }
        table.push_back(std::move(row));
    }

    // Rank successes by AIC; break ties by BIC, then parsimony, then name so
    // the ordering is reproducible.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].ok) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (table[a].aic != table[b].aic) return table[a].aic < table[b].aic;
        if (table[a].bic != table[b].bic) return table[a].bic < table[b].bic;
        if (table[a].basis.dimension() != table[b].basis.dimension())
            return table[a].basis.dimension() < table[b].basis.dimension();
        return table[a].basis.joined_name() < table[b].basis.joined_name();
    });
    for (std::size_t r = 0; r < order.size(); ++r) table[order[r]].rank = static_cast<int>(r) + 1;

    std::sort(table.begin(), table.end(), [](const CandidateResult& a, const CandidateResult& b) {
        if (a.ok != b.ok) return a.ok;
        if (a.ok) return a.rank < b.rank;
        return a.basis.joined_name() < b.basis.joined_name();
    });
    return table;
}

std::vector<BasisSpec> default_candidates() {
    const std::array<BasisTerm, 4> terms{BasisTerm::X, BasisTerm::X2, BasisTerm::LogX,
                                         BasisTerm::LogX2};
    std::vector<BasisSpec> out;
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<BasisTerm> chosen;
        for (unsigned bit = 0; bit < 4; ++bit)
            if (mask & (1u << bit)) chosen.push_back(terms[bit]);
        out.emplace_back(std::move(chosen));
    }
    return out;
}

}  // namespace drmroc
