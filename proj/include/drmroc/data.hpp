#pragma once

#include <string>
#include <vector>

#include "drmroc/basis.hpp"

namespace drmroc {

/// Two independent biomarker samples: healthy (group 0) and diseased (group 1).
/// Pooled layout is healthy block first, then diseased block, each ascending;
/// every weight vector in the package follows this layout. Immutable after
/// construction and safe to share across threads.
class TwoSampleData {
public:
    /// Sorts each group ascending. Throws InputError when a group has fewer
    /// than two observations or contains a non-finite value.
    TwoSampleData(std::vector<double> healthy, std::vector<double> diseased);

    const std::vector<double>& healthy() const { return healthy_; }
    const std::vector<double>& diseased() const { return diseased_; }
    const std::vector<double>& pooled() const { return pooled_; }

    int n0() const { return static_cast<int>(healthy_.size()); }
    int n1() const { return static_cast<int>(diseased_.size()); }
    int n() const { return n0() + n1(); }
    double rho() const { return static_cast<double>(n1()) / n(); }

    double min_value() const { return pooled_min_; }
    double max_value() const { return pooled_max_; }

private:
    std::vector<double> healthy_;
    std::vector<double> diseased_;
    std::vector<double> pooled_;
    double pooled_min_;
    double pooled_max_;
};

struct ValidationReport {
    int n0 = 0;
    int n1 = 0;
    double rho = 0.0;
    double min_value = 0.0;
    double max_value = 0.0;
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
};

/// Reports sample sizes, rho, the data range, and any basis-domain violations
/// (non-positive observations with a log basis).
ValidationReport validate(const TwoSampleData& data, const BasisSpec& basis);

/// Throws InputError when validate() finds any issue.
void require_valid(const TwoSampleData& data, const BasisSpec& basis);

}  // namespace drmroc
