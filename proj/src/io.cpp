#include "drmroc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "drmroc/errors.hpp"

namespace drmroc {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_double(const std::string& field, int line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": cannot parse value '" + field +
                         "'");
    }
}

// Shortest representation that round-trips through a double.
std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

json basis_json(const BasisSpec& basis) {
    json terms = json::array();
    for (const auto& term : basis.terms()) terms.push_back(term_name(term));
    return terms;
}

json nan_to_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

}  // namespace

TwoSampleData parse_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open dataset file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw InputError("dataset file '" + path + "' is empty");
    std::stringstream header(trim(line));
    std::string c0, c1, extra;
    if (!std::getline(header, c0, ',') || !std::getline(header, c1, ','))
        throw InputError("line 1: expected header 'value,group' or 'group,value'");
    if (std::getline(header, extra, ','))
        throw InputError("line 1: expected exactly two columns");
    c0 = lower(trim(c0));
    c1 = lower(trim(c1));
    int value_col;
    if (c0 == "value" && c1 == "group") value_col = 0;
    else if (c0 == "group" && c1 == "value") value_col = 1;
    else throw InputError("line 1: expected header 'value,group' or 'group,value'");

    std::vector<double> healthy;
    std::vector<double> diseased;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string row = trim(line);
        if (row.empty()) continue;
        std::stringstream fields(row);
        std::string f0, f1;
        if (!std::getline(fields, f0, ',') || !std::getline(fields, f1, ','))
            throw InputError("line " + std::to_string(line_no) + ": expected two fields");
        if (std::getline(fields, extra, ','))
            throw InputError("line " + std::to_string(line_no) + ": expected two fields");
        const std::string value_field = trim(value_col == 0 ? f0 : f1);
        const std::string group_field = trim(value_col == 0 ? f1 : f0);
        double value = parse_double(value_field, line_no);
        if (group_field == "0") healthy.push_back(value);
        else if (group_field == "1") diseased.push_back(value);
        else
            throw InputError("line " + std::to_string(line_no) + ": group must be 0 or 1, got '" +
                             group_field + "'");
    }
    try {
        return TwoSampleData(std::move(healthy), std::move(diseased));
    } catch (const InputError& err) {
        throw InputError("dataset file '" + path + "': " + err.what());
    }
}

std::string fit_result_json(const DrmFit& fit, const CutoffSolution& cut,
                            const YoudenEstimate& est) {
    json theta = json::array();
    for (int i = 0; i < fit.theta_hat.size(); ++i) theta.push_back(fit.theta_hat[i]);
    json out{
        {"basis", basis_json(fit.basis)},
        {"n0", fit.data.n0()},
        {"n1", fit.data.n1()},
        {"theta", theta},
        {"loglik", fit.loglik},
        {"iterations", fit.iterations},
        {"gradient_norm", fit.gradient_norm},
        {"cutoff", est.cutoff},
        {"sensitivity", est.sensitivity},
        {"specificity", est.specificity},
        {"youden", est.youden},
        {"degenerate", cut.degenerate},
    };
    if (!cut.warning.empty()) out["warning"] = cut.warning;
    json roots = json::array();
    for (double r : cut.roots) roots.push_back(r);
    out["roots"] = roots;
    return out.dump(2) + "\n";
}

std::string region_summary_json(const ConfidenceRegion& region) {
    json sigma = json::array();
    for (int r = 0; r < 2; ++r)
        sigma.push_back(json::array({region.sigma_hat(r, 0), region.sigma_hat(r, 1)}));
    json out{
        {"kind", region_kind_name(region.kind)},
        {"level", region.level},
        {"n", region.n},
        {"sensitivity", region.center[0]},
        {"specificity", region.center[1]},
        {"sigma", sigma},
        {"chi_square", region.chi_square()},
        {"area", region_area(region)},
        {"boundary_points", region.boundary.size()},
    };
    return out.dump(2) + "\n";
}

std::string gof_result_json(const GofTest& test) {
    json out{
        {"delta_n0", test.observed.delta_n0},
        {"delta_n1", test.observed.delta_n1},
        {"p_value", test.p_value},
        {"replicates_used", test.replicates_used},
        {"failures", test.failures},
    };
    return out.dump(2) + "\n";
}

std::string selection_table_json(const std::vector<CandidateResult>& table) {
    json rows = json::array();
    for (const auto& row : table) {
        json r{
            {"basis", basis_json(row.basis)},
            {"name", row.basis.joined_name()},
            {"ok", row.ok},
            {"rank", row.rank},
        };
        if (row.ok) {
            r["aic"] = row.aic;
            r["bic"] = row.bic;
            r["gof_p"] = row.gof_p ? json(*row.gof_p) : json(nullptr);
        } else {
            r["error"] = row.error;
        }
        rows.push_back(std::move(r));
    }
    return rows.dump(2) + "\n";
}

std::string simulation_report_json(const SimulationReport& report) {
    json out{
        {"distribution", report.distribution},
        {"n0", report.n0},
        {"n1", report.n1},
        {"j_star", report.j_star},
        {"rb_eta_pct", nan_to_null(report.rb_eta_pct)},
        {"mse_eta_x100", nan_to_null(report.mse_eta_x100)},
        {"rb_tau_pct", nan_to_null(report.rb_tau_pct)},
        {"mse_tau_x100", nan_to_null(report.mse_tau_x100)},
        {"cp_pct", nan_to_null(report.cp_pct)},
        {"acr_x100", nan_to_null(report.acr_x100)},
        {"replicates", report.replicates},
        {"failures", report.failures},
        {"seed", report.seed},
        {"valid", report.valid},
    };
    return out.dump(2) + "\n";
}

std::string boundary_csv(const ConfidenceRegion& region) {
    std::string out = "sensitivity,specificity\n";
    for (const auto& point : region.boundary)
        out += format_double(point[0]) + "," + format_double(point[1]) + "\n";
    return out;
}

std::string selection_csv(const std::vector<CandidateResult>& table) {
    std::string out = "basis,ok,aic,bic,gof_p,rank,error\n";
    for (const auto& row : table) {
        out += row.basis.joined_name() + ",";
        out += row.ok ? "1," : "0,";
        out += row.ok ? format_double(row.aic) : "";
        out += ",";
        out += row.ok ? format_double(row.bic) : "";
        out += ",";
        if (row.gof_p) out += format_double(*row.gof_p);
        out += "," + std::to_string(row.rank) + ",";
        std::string err = row.error;
        std::replace(err.begin(), err.end(), ',', ';');
        out += err + "\n";
    }
    return out;
}

std::string simulation_csv(const SimulationReport& report) {
    std::string out =
        "distribution,n0,n1,j_star,rb_eta_pct,mse_eta_x100,rb_tau_pct,mse_tau_x100,"
        "cp_pct,acr_x100,replicates,failures,seed,valid\n";
    out += report.distribution + "," + std::to_string(report.n0) + "," +
           std::to_string(report.n1) + "," + format_double(report.j_star) + "," +
           format_double(report.rb_eta_pct) + "," + format_double(report.mse_eta_x100) + "," +
           format_double(report.rb_tau_pct) + "," + format_double(report.mse_tau_x100) + "," +
           format_double(report.cp_pct) + "," + format_double(report.acr_x100) + "," +
           std::to_string(report.replicates) + "," + std::to_string(report.failures) + "," +
           std::to_string(report.seed) + "," + (report.valid ? "1" : "0") + "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw InputError("failed to write '" + path + "'");
}

}  // namespace drmroc
