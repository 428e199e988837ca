#pragma once

// Shared fixtures for the unit tests. The tiny 6+6 dataset matches
// tests/oracles/fit_oracle.py, which freezes the expected values asserted in
// the suites.

#include <vector>

#include "drmroc/drmroc.hpp"

namespace testutil {

inline const std::vector<double> kHealthy{0.8, 1.2, 1.5, 2.1, 0.9, 1.1};
inline const std::vector<double> kDiseased{1.4, 2.2, 3.1, 1.9, 2.5, 2.8};

inline drmroc::TwoSampleData tiny_data() {
    return drmroc::TwoSampleData(kHealthy, kDiseased);
}

inline drmroc::BasisSpec log_basis() {
    return drmroc::BasisSpec({drmroc::BasisTerm::LogX});
}

/// Deterministic synthetic sample from a built-in scenario.
inline drmroc::TwoSampleData scenario_data(int n0, int n1, std::uint64_t seed,
                                           drmroc::Family family = drmroc::Family::Lognormal,
                                           double j_star = 0.5) {
    drmroc::Scenario scenario = drmroc::make_scenario(family, j_star, n0, n1);
    drmroc::Rng rng(seed);
    return drmroc::draw_scenario_data(scenario, rng);
}

}  // namespace testutil
