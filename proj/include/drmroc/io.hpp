#pragma once

#include <string>
#include <vector>

#include "drmroc/cutoff.hpp"
#include "drmroc/data.hpp"
#include "drmroc/gof.hpp"
#include "drmroc/region.hpp"
#include "drmroc/simulate.hpp"

namespace drmroc {

/// Reads a CSV with header columns `value` (real) and `group` (0 = healthy,
/// 1 = diseased), in either column order. Throws InputError with the line
/// number for malformed rows or unknown group codes, and when a group ends up
/// empty or too small.
TwoSampleData parse_dataset(const std::string& path);

/// Serialization helpers. All doubles are written with round-trip precision.
std::string fit_result_json(const DrmFit& fit, const CutoffSolution& cut,
                            const YoudenEstimate& est);
std::string region_summary_json(const ConfidenceRegion& region);
std::string gof_result_json(const GofTest& test);
std::string selection_table_json(const std::vector<CandidateResult>& table);
std::string simulation_report_json(const SimulationReport& report);

std::string boundary_csv(const ConfidenceRegion& region);                     // eta,tau
std::string selection_csv(const std::vector<CandidateResult>& table);         // basis,aic,bic,rank
std::string simulation_csv(const SimulationReport& report);  // table-layout row

void write_text_file(const std::string& path, const std::string& content);

}  // namespace drmroc
