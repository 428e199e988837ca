#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace drmroc {

/// Closed set of basis terms for the density ratio exponent.
enum class BasisTerm { X, X2, LogX, LogX2 };

std::string term_name(BasisTerm term);
BasisTerm term_from_name(const std::string& name);

/// The basis q(x) of the density ratio model f1(x) = exp{theta' Q(x)} f0(x),
/// where Q(x) = (1, q(x)')'. Terms are drawn from {x, x^2, log x, (log x)^2};
/// the closed enumeration keeps the derivative q'(x) exact.
class BasisSpec {
public:
    explicit BasisSpec(std::vector<BasisTerm> terms);

    /// Parse term names such as "x", "x2", "log_x", "log_x2".
    static BasisSpec from_names(const std::vector<std::string>& names);

    int dimension() const { return static_cast<int>(terms_.size()); }  // p
    const std::vector<BasisTerm>& terms() const { return terms_; }

    /// True when any term involves log(x), restricting the support to x > 0.
    bool needs_positive_support() const;

    /// Q(x) = (1, q(x)')' of length p + 1. Throws InputError outside the domain.
    Eigen::VectorXd eval(double x) const;

    /// q'(x) of length p.
    Eigen::VectorXd derivative(double x) const;

    std::vector<std::string> names() const;

    /// Terms joined by `sep`, e.g. "x+x2"; used in CSV cells and reports.
    std::string joined_name(char sep = '+') const;

    bool operator==(const BasisSpec& other) const { return terms_ == other.terms_; }

private:
    std::vector<BasisTerm> terms_;
};

}  // namespace drmroc
