// Python bindings for the drmroc library: fitting, cut-off estimation,
// confidence regions, goodness of fit, basis selection, and the simulation
// harness.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drmroc/drmroc.hpp"

namespace py = pybind11;
using namespace drmroc;

namespace {

BasisSpec basis_from_any(const std::vector<std::string>& names) {
    return BasisSpec::from_names(names);
}

}  // namespace

PYBIND11_MODULE(drmroc, m) {
    m.doc() = "Sensitivity/specificity inference at the Youden-optimal cut-off "
              "under a two-sample density ratio model";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);
    py::register_exception<EstimationError>(m, "EstimationError", PyExc_RuntimeError);

    py::class_<BasisSpec>(m, "BasisSpec")
        .def(py::init(&basis_from_any), py::arg("terms"),
             "Terms drawn from {'x', 'x2', 'log_x', 'log_x2'}")
        .def_property_readonly("dimension", &BasisSpec::dimension)
        .def_property_readonly("names", &BasisSpec::names)
        .def("eval", &BasisSpec::eval, py::arg("x"))
        .def("derivative", &BasisSpec::derivative, py::arg("x"))
        .def("__repr__",
             [](const BasisSpec& b) { return "BasisSpec('" + b.joined_name() + "')"; });

    py::class_<TwoSampleData>(m, "TwoSampleData")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("healthy"),
             py::arg("diseased"))
        .def_property_readonly("healthy", &TwoSampleData::healthy)
        .def_property_readonly("diseased", &TwoSampleData::diseased)
        .def_property_readonly("n0", &TwoSampleData::n0)
        .def_property_readonly("n1", &TwoSampleData::n1)
        .def_property_readonly("n", &TwoSampleData::n)
        .def_property_readonly("rho", &TwoSampleData::rho);

    py::class_<DrmFit>(m, "DrmFit")
        .def_readonly("theta", &DrmFit::theta_hat)
        .def_readonly("weights", &DrmFit::weights)
        .def_readonly("loglik", &DrmFit::loglik)
        .def_readonly("iterations", &DrmFit::iterations)
        .def_readonly("gradient_norm", &DrmFit::gradient_norm)
        .def_property_readonly("alpha", &DrmFit::alpha)
        .def_property_readonly("beta", &DrmFit::beta)
        .def("log_density_ratio", &DrmFit::log_density_ratio, py::arg("x"));

    py::class_<YoudenEstimate>(m, "YoudenEstimate")
        .def_readonly("cutoff", &YoudenEstimate::cutoff)
        .def_readonly("sensitivity", &YoudenEstimate::sensitivity)
        .def_readonly("specificity", &YoudenEstimate::specificity)
        .def_readonly("youden", &YoudenEstimate::youden);

    py::class_<CutoffSolution>(m, "CutoffSolution")
        .def_readonly("cutoff", &CutoffSolution::cutoff)
        .def_readonly("roots", &CutoffSolution::roots)
        .def_readonly("degenerate", &CutoffSolution::degenerate)
        .def_readonly("warning", &CutoffSolution::warning);

    py::enum_<RegionKind>(m, "RegionKind")
        .value("WALD", RegionKind::Wald)
        .value("LOGIT", RegionKind::Logit);

    py::class_<ConfidenceRegion>(m, "ConfidenceRegion")
        .def_readonly("center", &ConfidenceRegion::center)
        .def_readonly("sigma", &ConfidenceRegion::sigma_hat)
        .def_readonly("n", &ConfidenceRegion::n)
        .def_readonly("level", &ConfidenceRegion::level)
        .def_readonly("kind", &ConfidenceRegion::kind)
        .def_readonly("boundary", &ConfidenceRegion::boundary)
        .def_property_readonly("area", &region_area)
        .def("contains", &region_contains, py::arg("sensitivity"), py::arg("specificity"));

    py::class_<BootstrapCovariance>(m, "BootstrapCovariance")
        .def_readonly("sigma", &BootstrapCovariance::sigma)
        .def_readonly("replicates_used", &BootstrapCovariance::replicates_used)
        .def_readonly("failures", &BootstrapCovariance::failures);

    py::class_<GofTest>(m, "GofTest")
        .def_property_readonly("delta_n0",
                               [](const GofTest& t) { return t.observed.delta_n0; })
        .def_property_readonly("delta_n1",
                               [](const GofTest& t) { return t.observed.delta_n1; })
        .def_readonly("p_value", &GofTest::p_value)
        .def_readonly("replicates_used", &GofTest::replicates_used)
        .def_readonly("failures", &GofTest::failures);

    py::class_<CandidateResult>(m, "CandidateResult")
        .def_property_readonly("basis",
                               [](const CandidateResult& r) { return r.basis.joined_name(); })
        .def_readonly("ok", &CandidateResult::ok)
        .def_readonly("aic", &CandidateResult::aic)
        .def_readonly("bic", &CandidateResult::bic)
        .def_readonly("gof_p", &CandidateResult::gof_p)
        .def_readonly("rank", &CandidateResult::rank)
        .def_readonly("error", &CandidateResult::error);

    py::class_<SimulationReport>(m, "SimulationReport")
        .def_readonly("distribution", &SimulationReport::distribution)
        .def_readonly("n0", &SimulationReport::n0)
        .def_readonly("n1", &SimulationReport::n1)
        .def_readonly("j_star", &SimulationReport::j_star)
        .def_readonly("rb_eta_pct", &SimulationReport::rb_eta_pct)
        .def_readonly("mse_eta_x100", &SimulationReport::mse_eta_x100)
        .def_readonly("rb_tau_pct", &SimulationReport::rb_tau_pct)
        .def_readonly("mse_tau_x100", &SimulationReport::mse_tau_x100)
        .def_readonly("cp_pct", &SimulationReport::cp_pct)
        .def_readonly("acr_x100", &SimulationReport::acr_x100)
        .def_readonly("replicates", &SimulationReport::replicates)
        .def_readonly("failures", &SimulationReport::failures)
        .def_readonly("valid", &SimulationReport::valid);

    m.def(
        "fit",
        [](const TwoSampleData& data, const std::vector<std::string>& basis) {
            return fit_drm(data, basis_from_any(basis));
        },
        py::arg("data"), py::arg("basis"), "Maximum empirical likelihood fit");

    m.def(
        "estimate",
        [](const TwoSampleData& data, const std::vector<std::string>& basis) {
            DrmFit fit = fit_drm(data, basis_from_any(basis));
            CutoffSolution cut = solve_cutoff(fit);
            return py::make_tuple(estimate_accuracy(fit, cut.cutoff), cut);
        },
        py::arg("data"), py::arg("basis"),
        "Fit, locate the Youden-optimal cut-off, and estimate "
        "(sensitivity, specificity); returns (estimate, cutoff_solution)");

    m.def(
        "solve_cutoff", [](const DrmFit& fit) { return solve_cutoff(fit); }, py::arg("fit"));

    m.def("estimate_accuracy", &estimate_accuracy, py::arg("fit"), py::arg("cutoff"));

    m.def(
        "bootstrap_sigma",
        [](const TwoSampleData& data, const std::vector<std::string>& basis, int B,
           std::uint64_t seed, int threads) {
            return bootstrap_sigma(data, basis_from_any(basis), B, seed, threads);
        },
        py::arg("data"), py::arg("basis"), py::arg("B"), py::arg("seed"),
        py::arg("threads") = 1,
        "Within-group bootstrap covariance of (sensitivity, specificity)");

    m.def(
        "region",
        [](const TwoSampleData& data, const std::vector<std::string>& basis, double level,
           RegionKind kind, int B, std::uint64_t seed, int threads) {
            DrmFit fit = fit_drm(data, basis_from_any(basis));
            CutoffSolution cut = solve_cutoff(fit);
            YoudenEstimate est = estimate_accuracy(fit, cut.cutoff);
            BootstrapCovariance boot = bootstrap_sigma(data, basis_from_any(basis), B, seed,
                                                       threads);
            return kind == RegionKind::Wald ? wald_region(est, boot.sigma, data.n(), level)
                                            : logit_region(est, boot.sigma, data.n(), level);
        },
        py::arg("data"), py::arg("basis"), py::arg("level") = 0.95,
        py::arg("kind") = RegionKind::Logit, py::arg("B") = 500, py::arg("seed") = 0,
        py::arg("threads") = 1, "Joint confidence region for (sensitivity, specificity)");

    m.def(
        "gof",
        [](const TwoSampleData& data, const std::vector<std::string>& basis, int B,
           std::uint64_t seed, int threads) {
            return gof_bootstrap_pvalue(data, basis_from_any(basis), B, seed, threads);
        },
        py::arg("data"), py::arg("basis"), py::arg("B"), py::arg("seed"),
        py::arg("threads") = 1, "Bootstrap goodness-of-fit test");

    m.def(
        "select_basis",
        [](const TwoSampleData& data, int gof_bootstrap, std::uint64_t seed, int threads) {
            SelectOptions options;
            options.gof_bootstrap = gof_bootstrap;
            options.seed = seed;
            options.threads = threads;
            return select_basis(data, default_candidates(), options);
        },
        py::arg("data"), py::arg("gof_bootstrap") = 0, py::arg("seed") = 0,
        py::arg("threads") = 1, "Rank the 15 default candidate bases by AIC");

    m.def(
        "simulate",
        [](const std::string& family, double j_star, int n0, int n1, int L, int bootstrap,
           const std::string& kind, double level, std::uint64_t seed, int threads) {
            Scenario scenario = make_scenario(family_from_name(family), j_star, n0, n1);
            SimulationOptions options;
            options.bootstrap = bootstrap;
            options.kind = bootstrap > 0
                               ? std::optional<RegionKind>(region_kind_from_name(kind))
                               : std::nullopt;
            options.level = level;
            options.threads = threads;
            return run_simulation(scenario, L, options, seed);
        },
        py::arg("family"), py::arg("j_star"), py::arg("n0"), py::arg("n1"), py::arg("L"),
        py::arg("bootstrap") = 300, py::arg("kind") = "logit", py::arg("level") = 0.95,
        py::arg("seed") = 0, py::arg("threads") = 1, "Monte Carlo study of one scenario");

    m.def(
        "true_values",
        [](const std::string& family, const std::array<double, 4>& params) {
            TrueValues v = true_values(family_from_name(family), params);
            return py::make_tuple(v.cutoff, v.sensitivity, v.specificity, v.youden);
        },
        py::arg("family"), py::arg("params"),
        "Population (cutoff, sensitivity, specificity, youden) of a scenario");

    m.def("parse_dataset", &parse_dataset, py::arg("path"));
}
