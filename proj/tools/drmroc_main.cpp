// drmroc: semiparametric sensitivity/specificity analysis at the
// Youden-optimal cut-off under a two-sample density ratio model.
//
// Exit codes: 0 success, 2 input error, 3 estimation failure,
// 4 degenerate-model warning escalated by --strict.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drmroc/drmroc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitEstimation = 3;
constexpr int kExitDegenerate = 4;

std::vector<std::string> split(const std::string& joined, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(joined);
    std::string part;
    while (std::getline(stream, part, sep))
        if (!part.empty()) parts.push_back(part);
    return parts;
}

drmroc::BasisSpec parse_basis(const std::string& flag) {
    auto names = split(flag, ',');
    if (names.empty()) throw drmroc::InputError("--basis must name at least one term");
    return drmroc::BasisSpec::from_names(names);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        drmroc::write_text_file(out_path, text);
}

struct CommonFlags {
    std::string input;
    std::string basis = "log_x";
    std::string out;
    int threads = 1;
};

int cmd_fit(const CommonFlags& flags, bool strict) {
    drmroc::TwoSampleData data = drmroc::parse_dataset(flags.input);
    drmroc::BasisSpec basis = parse_basis(flags.basis);
    drmroc::DrmFit fit = drmroc::fit_drm(data, basis);
    drmroc::CutoffSolution cut = drmroc::solve_cutoff(fit);
    drmroc::YoudenEstimate est = drmroc::estimate_accuracy(fit, cut.cutoff);
    emit(drmroc::fit_result_json(fit, cut, est), flags.out);
    if (cut.degenerate) {
        std::cerr << "warning: " << cut.warning << "\n";
        if (strict) return kExitDegenerate;
    }
    return kExitOk;
}

int cmd_region(const CommonFlags& flags, double level, const std::string& kind_name, int boot,
               std::uint64_t seed, bool strict) {
    drmroc::TwoSampleData data = drmroc::parse_dataset(flags.input);
    drmroc::BasisSpec basis = parse_basis(flags.basis);
    drmroc::RegionKind kind = drmroc::region_kind_from_name(kind_name);
    drmroc::DrmFit fit = drmroc::fit_drm(data, basis);
    drmroc::CutoffSolution cut = drmroc::solve_cutoff(fit);
    drmroc::YoudenEstimate est = drmroc::estimate_accuracy(fit, cut.cutoff);
    drmroc::BootstrapCovariance boot_cov =
        drmroc::bootstrap_sigma(data, basis, boot, seed, flags.threads);
    drmroc::ConfidenceRegion region =
        kind == drmroc::RegionKind::Wald
            ? drmroc::wald_region(est, boot_cov.sigma, data.n(), level)
            : drmroc::logit_region(est, boot_cov.sigma, data.n(), level);
    if (flags.out.empty()) {
        std::cout << drmroc::region_summary_json(region);
    } else {
        drmroc::write_text_file(flags.out + ".json", drmroc::region_summary_json(region));
        drmroc::write_text_file(flags.out + "_boundary.csv", drmroc::boundary_csv(region));
    }
    if (cut.degenerate) {
        std::cerr << "warning: " << cut.warning << "\n";
        if (strict) return kExitDegenerate;
    }
    return kExitOk;
}

int cmd_gof(const CommonFlags& flags, int boot, std::uint64_t seed) {
    drmroc::TwoSampleData data = drmroc::parse_dataset(flags.input);
    drmroc::BasisSpec basis = parse_basis(flags.basis);
    drmroc::GofTest test = drmroc::gof_bootstrap_pvalue(data, basis, boot, seed, flags.threads);
    emit(drmroc::gof_result_json(test), flags.out);
    return kExitOk;
}

int cmd_select(const CommonFlags& flags, const std::string& candidates_flag, int gof_boot,
               std::uint64_t seed, bool have_seed) {
    drmroc::TwoSampleData data = drmroc::parse_dataset(flags.input);
    std::vector<drmroc::BasisSpec> candidates;
    if (candidates_flag == "all") {
        candidates = drmroc::default_candidates();
    } else {
        for (const auto& name : split(candidates_flag, ','))
            candidates.push_back(drmroc::BasisSpec::from_names(split(name, '+')));
    }
    if (gof_boot > 0 && !have_seed)
        throw drmroc::InputError("--seed is required when --gof-boot is set");
    drmroc::SelectOptions options;
    options.gof_bootstrap = gof_boot;
    options.seed = seed;
    options.threads = flags.threads;
    auto table = drmroc::select_basis(data, candidates, options);
    emit(drmroc::selection_csv(table), flags.out);
    return kExitOk;
}

int cmd_simulate(const std::string& family_name, double j_star, int n0, int n1, int reps,
                 int boot, const std::string& kind_name, double level, std::uint64_t seed,
                 int threads, const std::string& out) {
    drmroc::Scenario scenario =
        drmroc::make_scenario(drmroc::family_from_name(family_name), j_star, n0, n1);
    drmroc::SimulationOptions options;
    options.bootstrap = boot;
    options.kind = boot > 0 ? std::optional<drmroc::RegionKind>(
                                  drmroc::region_kind_from_name(kind_name))
                            : std::nullopt;
    options.level = level;
    options.threads = threads;
    drmroc::SimulationReport report = drmroc::run_simulation(scenario, reps, options, seed);
    std::cout << drmroc::simulation_report_json(report);
    if (!out.empty()) drmroc::write_text_file(out, drmroc::simulation_csv(report));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sensitivity/specificity inference at the Youden-optimal cut-off "
                 "under a two-sample density ratio model"};
    app.require_subcommand(1);

    CommonFlags flags;
    bool strict = false;
    double level = 0.95;
    std::string kind = "logit";
    int boot = 500;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input)
            cmd->add_option("--input", flags.input, "dataset CSV (value,group header)")
                ->required();
        cmd->add_option("--out", flags.out, "output path (stdout when omitted)");
        cmd->add_option("--threads", flags.threads, "worker threads (0 = hardware)")
            ->default_val(1);
    };

    auto* fit_cmd = app.add_subcommand("fit", "fit the model and estimate the cut-off");
    add_common(fit_cmd);
    fit_cmd->add_option("--basis", flags.basis, "comma list of terms: x,x2,log_x,log_x2")
        ->default_val("log_x");
    fit_cmd->add_flag("--strict", strict, "exit 4 on degenerate-model warnings");

    auto* region_cmd = app.add_subcommand("region", "joint confidence region for "
                                                    "(sensitivity, specificity)");
    add_common(region_cmd);
    region_cmd->get_option("--out")->description(
        "output prefix: writes <prefix>.json and <prefix>_boundary.csv (stdout when omitted)");
    region_cmd->add_option("--basis", flags.basis)->default_val("log_x");
    region_cmd->add_option("--level", level, "confidence level")->default_val(0.95);
    region_cmd->add_option("--kind", kind, "wald or logit")->default_val("logit");
    region_cmd->add_option("--boot", boot, "bootstrap replicates")->default_val(500);
    region_cmd->add_option("--seed", seed, "random seed")->required();
    region_cmd->add_flag("--strict", strict);

    auto* gof_cmd = app.add_subcommand("gof", "bootstrap goodness-of-fit test");
    add_common(gof_cmd);
    gof_cmd->add_option("--basis", flags.basis)->default_val("log_x");
    gof_cmd->add_option("--boot", boot, "bootstrap replicates")->default_val(1000);
    gof_cmd->add_option("--seed", seed, "random seed")->required();

    std::string candidates = "all";
    int gof_boot = 0;
    auto* select_cmd = app.add_subcommand("select", "rank candidate bases by AIC/BIC");
    add_common(select_cmd);
    select_cmd->add_option("--candidates", candidates,
                           "'all' or comma list of +-joined bases, e.g. x+x2,log_x")
        ->default_val("all");
    select_cmd->add_option("--gof-boot", gof_boot,
                           "per-candidate bootstrap p-value replicates (0 = skip)")
        ->default_val(0);
    auto* select_seed_opt = select_cmd->add_option("--seed", seed, "random seed");

    std::string family = "lognormal";
    double j_star = 0.5;
    int n0 = 50, n1 = 50, reps = 500;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo study of one scenario");
    sim_cmd->add_option("--family", family, "lognormal, gamma, or beta")->default_val("lognormal");
    sim_cmd->add_option("--jstar", j_star, "0.3, 0.5, or 0.7")->default_val(0.5);
    sim_cmd->add_option("--n0", n0, "healthy group size")->default_val(50);
    sim_cmd->add_option("--n1", n1, "diseased group size")->default_val(50);
    sim_cmd->add_option("--reps", reps, "Monte Carlo replicates")->default_val(500);
    sim_cmd->add_option("--boot", boot, "bootstrap replicates per run (0 = skip regions)")
        ->default_val(300);
    sim_cmd->add_option("--kind", kind)->default_val("logit");
    sim_cmd->add_option("--level", level)->default_val(0.95);
    sim_cmd->add_option("--seed", seed, "random seed")->required();
    sim_cmd->add_option("--threads", flags.threads)->default_val(1);
    sim_cmd->add_option("--out", flags.out, "write the report row as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (fit_cmd->parsed()) return cmd_fit(flags, strict);
        if (region_cmd->parsed()) return cmd_region(flags, level, kind, boot, seed, strict);
        if (gof_cmd->parsed()) return cmd_gof(flags, boot, seed);
        if (select_cmd->parsed())
            return cmd_select(flags, candidates, gof_boot, seed, select_seed_opt->count() > 0);
        if (sim_cmd->parsed())
            return cmd_simulate(family, j_star, n0, n1, reps, boot, kind, level, seed,
                                flags.threads, flags.out);
    } catch (const drmroc::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const drmroc::FitError& e) {
        std::cerr << "estimation failure: " << e.what() << "\n";
        return kExitEstimation;
    } catch (const drmroc::EstimationError& e) {
        std::cerr << "estimation failure: " << e.what() << "\n";
        return kExitEstimation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEstimation;
    }
    return kExitInput;
}
