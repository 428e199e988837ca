#include "drmroc/data.hpp"

#include <algorithm>
#include <cmath>

#include "drmroc/errors.hpp"

namespace drmroc {

namespace {

void check_group(const std::vector<double>& values, const char* label) {
    if (values.size() < 2)
        throw InputError(std::string(label) + " sample needs at least 2 observations, got " +
                         std::to_string(values.size()));
    for (double v : values) {
        if (!std::isfinite(v))
            throw InputError(std::string(label) + " sample contains a non-finite value");
    }
}

}  // namespace

TwoSampleData::TwoSampleData(std::vector<double> healthy, std::vector<double> diseased)
    : healthy_(std::move(healthy)), diseased_(std::move(diseased)) {
    check_group(healthy_, "healthy");
    check_group(diseased_, "diseased");
    std::sort(healthy_.begin(), healthy_.end());
    std::sort(diseased_.begin(), diseased_.end());
    pooled_.reserve(healthy_.size() + diseased_.size());
    pooled_.insert(pooled_.end(), healthy_.begin(), healthy_.end());
    pooled_.insert(pooled_.end(), diseased_.begin(), diseased_.end());
    pooled_min_ = std::min(healthy_.front(), diseased_.front());
    pooled_max_ = std::max(healthy_.back(), diseased_.back());
}

ValidationReport validate(const TwoSampleData& data, const BasisSpec& basis) {
    ValidationReport report;
    report.n0 = data.n0();
    report.n1 = data.n1();
    report.rho = data.rho();
    report.min_value = data.min_value();
    report.max_value = data.max_value();
    if (basis.needs_positive_support() && data.min_value() <= 0.0) {
        int offenders = 0;
        for (double v : data.pooled())
            if (v <= 0.0) ++offenders;
        report.issues.push_back("basis " + basis.joined_name() + " requires positive data; " +
                                std::to_string(offenders) + " observation(s) are <= 0");
    }
    return report;
}

void require_valid(const TwoSampleData& data, const BasisSpec& basis) {
    ValidationReport report = validate(data, basis);
    if (report.ok()) return;
    std::string msg = "invalid input:";
    for (const auto& issue : report.issues) msg += " " + issue + ";";
    msg.pop_back();
    throw InputError(msg);
}

}  // namespace drmroc
