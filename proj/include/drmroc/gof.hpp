#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drmroc/el_fit.hpp"

namespace drmroc {

/// Sup-distance statistics between the fitted and the per-group empirical
/// CDFs: delta0 = sup_x |F0_fit(x) - F0_emp(x)| and likewise delta1. The two
/// satisfy delta0 = rho delta1 / (1 - rho) exactly.
struct GofStatistic {
    double delta_n0;
    double delta_n1;
};

/// Suprema are exact: both differences are step functions with jumps only at
/// pooled data points, so the scan evaluates at each point and just before it.
GofStatistic gof_statistic(const DrmFit& fit);

struct GofTest {
    GofStatistic observed;
    double p_value;
    int replicates_used = 0;
    int failures = 0;
};

/// Bootstrap test of the density ratio model: B null datasets are drawn from
/// the fitted CDFs (n0 from F0_fit, n1 from F1_fit), each refitted, and
///   p = (1 + #{delta0* >= delta0}) / (B + 1).
/// Requires B >= 200; more than 5% refit failures raises EstimationError.
GofTest gof_bootstrap_pvalue(const TwoSampleData& data, const BasisSpec& basis, int B,
                             std::uint64_t seed, int threads = 1);

struct InformationCriteria {
    double aic;  // -2 loglik + 2(p+1)
    double bic;  // -2 loglik + (p+1) log n
};

InformationCriteria information_criteria(const DrmFit& fit);

struct CandidateResult {
    BasisSpec basis;
    bool ok = false;
    double aic = 0.0;
    double bic = 0.0;
    std::optional<double> gof_p;
    int rank = 0;        // 1-based among successful fits; 0 for failures
    std::string error;   // non-empty for failed candidates
};

struct SelectOptions {
    int gof_bootstrap = 0;  // 0 = skip the per-candidate bootstrap p-value
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Fits every candidate basis and ranks by AIC (ties: BIC, then fewer terms).
/// Failed candidates are kept in the table with an error marker.
std::vector<CandidateResult> select_basis(const TwoSampleData& data,
                                          const std::vector<BasisSpec>& candidates,
                                          const SelectOptions& options = {});

/// The 15 non-empty combinations of {x, x^2, log x, (log x)^2}.
std::vector<BasisSpec> default_candidates();

}  // namespace drmroc
