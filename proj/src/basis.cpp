#include "drmroc/basis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "drmroc/errors.hpp"

namespace drmroc {

std::string term_name(BasisTerm term) {
    switch (term) {
        case BasisTerm::X: return "x";
        case BasisTerm::X2: return "x2";
        case BasisTerm::LogX: return "log_x";
        case BasisTerm::LogX2: return "log_x2";
    }
    throw InputError("unknown basis term");
}

BasisTerm term_from_name(const std::string& name) {
    if (name == "x") return BasisTerm::X;
    if (name == "x2") return BasisTerm::X2;
    if (name == "log_x") return BasisTerm::LogX;
    if (name == "log_x2") return BasisTerm::LogX2;
    throw InputError("unknown basis term '" + name + "' (expected x, x2, log_x, log_x2)");
}

BasisSpec::BasisSpec(std::vector<BasisTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InputError("basis must contain at least one term");
    std::set<BasisTerm> seen(terms_.begin(), terms_.end());
    if (seen.size() != terms_.size()) throw InputError("basis terms must be distinct");
}

BasisSpec BasisSpec::from_names(const std::vector<std::string>& names) {
    std::vector<BasisTerm> terms;
    terms.reserve(names.size());
    for (const auto& name : names) terms.push_back(term_from_name(name));
    return BasisSpec(std::move(terms));
}

bool BasisSpec::needs_positive_support() const {
    return std::any_of(terms_.begin(), terms_.end(), [](BasisTerm t) {
        return t == BasisTerm::LogX || t == BasisTerm::LogX2;
    });
}

namespace {

double term_value(BasisTerm term, double x, double log_x) {
    switch (term) {
        case BasisTerm::X: return x;
        case BasisTerm::X2: return x * x;
        case BasisTerm::LogX: return log_x;
        case BasisTerm::LogX2: return log_x * log_x;
    }
    return 0.0;
}

double term_derivative(BasisTerm term, double x, double log_x) {
    switch (term) {
        case BasisTerm::X: return 1.0;
        case BasisTerm::X2: return 2.0 * x;
        case BasisTerm::LogX: return 1.0 / x;
        case BasisTerm::LogX2: return 2.0 * log_x / x;
    }
    return 0.0;
}

}  // namespace

Eigen::VectorXd BasisSpec::eval(double x) const {
    if (!std::isfinite(x)) throw InputError("basis evaluation point must be finite");
    if (needs_positive_support() && x <= 0.0)
        throw InputError("log basis requires x > 0");
    const double log_x = needs_positive_support() ? std::log(x) : 0.0;
    Eigen::VectorXd q(dimension() + 1);
    q[0] = 1.0;
    for (int k = 0; k < dimension(); ++k) q[k + 1] = term_value(terms_[k], x, log_x);
    return q;
}

Eigen::VectorXd BasisSpec::derivative(double x) const {
    if (!std::isfinite(x)) throw InputError("basis evaluation point must be finite");
    if (needs_positive_support() && x <= 0.0)
        throw InputError("log basis requires x > 0");
    const double log_x = needs_positive_support() ? std::log(x) : 0.0;
    Eigen::VectorXd d(dimension());
    for (int k = 0; k < dimension(); ++k) d[k] = term_derivative(terms_[k], x, log_x);
    return d;
}

std::vector<std::string> BasisSpec::names() const {
    std::vector<std::string> out;
    out.reserve(terms_.size());
    for (auto t : terms_) out.push_back(term_name(t));
    return out;
}

std::string BasisSpec::joined_name(char sep) const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += term_name(terms_[i]);
    }
    return out;
}

}  // namespace drmroc
