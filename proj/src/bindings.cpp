#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gapflow/diagnostics.hpp"
#include "gapflow/estimation.hpp"
#include "gapflow/io.hpp"
#include "gapflow/simulation.hpp"

namespace py = pybind11;
using namespace gapflow;

PYBIND11_MODULE(_core, m) {
    m.doc() = "gap distributions of superposed renewal traffic streams";

    py::enum_<Family>(m, "Family")
        .value("Exponential", Family::Exponential)
        .value("Gamma", Family::Gamma)
        .value("LogLogistic", Family::LogLogistic);
    m.def("family_from_name", &family_from_name, py::arg("name"));

    py::class_<HeadwayModel>(m, "HeadwayModel")
        .def_static("exponential", &HeadwayModel::exponential, py::arg("rate"))
        .def_static("gamma", &HeadwayModel::gamma, py::arg("shape"),
                    py::arg("rate"))
        .def_static("log_logistic", &HeadwayModel::log_logistic,
                    py::arg("scale"), py::arg("shape"))
        .def_property_readonly("family", &HeadwayModel::family)
        .def_property_readonly("params", &HeadwayModel::params)
        .def_property_readonly("mean", &HeadwayModel::mean)
        .def("pdf", &HeadwayModel::pdf, py::arg("y"))
        .def("cdf", &HeadwayModel::cdf, py::arg("y"))
        .def("survival", &HeadwayModel::survival, py::arg("y"));

    m.def("sample_headways", &sample_headways, py::arg("model"), py::arg("n"),
          py::arg("seed"));

    py::class_<ResidualView>(m, "ResidualView")
        .def(py::init<HeadwayModel, double>(), py::arg("source"),
             py::arg("quad_tol") = 1e-8)
        .def("pdf", &ResidualView::pdf, py::arg("y"))
        .def("cdf", &ResidualView::cdf, py::arg("y"))
        .def("survival", &ResidualView::survival, py::arg("y"));

    py::class_<SuperposedGapModel>(m, "SuperposedGapModel")
        .def(py::init<std::vector<HeadwayModel>>(), py::arg("components"))
        .def_property_readonly("L", &SuperposedGapModel::size)
        .def_property_readonly("components", &SuperposedGapModel::components)
        .def_property_readonly("total_flow", &SuperposedGapModel::total_flow)
        .def_property_readonly("mean_gap", &SuperposedGapModel::mean_gap)
        .def("combined_residual",
             [](const SuperposedGapModel& m, double y) {
                 const auto r = m.combined_residual(y);
                 return std::make_pair(r.cdf, r.pdf);
             },
             py::arg("y"))
        .def("gap_cdf", &SuperposedGapModel::gap_cdf, py::arg("g"))
        .def("gap_pdf", &SuperposedGapModel::gap_pdf, py::arg("g"));

    m.def("exponential_gap_cdf",
          [](const std::vector<double>& rates, double g) {
              return exponential_gap_cdf(rates)(g);
          },
          py::arg("rates"), py::arg("g"));

    py::class_<FitOptions>(m, "FitOptions")
        .def(py::init<>())
        .def_readwrite("n_starts", &FitOptions::n_starts)
        .def_readwrite("max_iterations", &FitOptions::max_iterations)
        .def_readwrite("rel_tol", &FitOptions::rel_tol)
        .def_readwrite("jitter", &FitOptions::jitter)
        .def_readwrite("seed", &FitOptions::seed)
        .def_readwrite("threads", &FitOptions::threads);

    py::class_<FitReport>(m, "FitReport")
        .def_readonly("family", &FitReport::family)
        .def_readonly("L", &FitReport::L)
        .def_readonly("estimates", &FitReport::estimates)
        .def_readonly("std_errors", &FitReport::std_errors)
        .def_readonly("t_values", &FitReport::t_values)
        .def_readonly("max_loglik", &FitReport::max_loglik)
        .def_readonly("aic", &FitReport::aic)
        .def_readonly("n_obs", &FitReport::n_obs)
        .def_readonly("n_zero_dropped", &FitReport::n_zero_dropped)
        .def_readonly("converged", &FitReport::converged)
        .def_readonly("rank_deficient", &FitReport::rank_deficient)
        .def_readonly("message", &FitReport::message)
        .def("to_model", &FitReport::to_model)
        .def("to_json",
             [](const FitReport& r) { return io::fit_report_to_json(r); });

    py::class_<SelectionResult>(m, "SelectionResult")
        .def_readonly("best", &SelectionResult::best)
        .def_readonly("table", &SelectionResult::table);

    m.def("loglik_gaps", &loglik_gaps, py::arg("model"), py::arg("gaps"));
    m.def("loglik_headways", &loglik_headways, py::arg("model"),
          py::arg("headways"));
    m.def("fit_gaps", &fit_gaps, py::arg("gaps"), py::arg("family"),
          py::arg("L"), py::arg("options") = FitOptions{},
          py::call_guard<py::gil_scoped_release>());
    m.def("fit_headways", &fit_headways, py::arg("headways"), py::arg("family"),
          py::arg("options") = FitOptions{},
          py::call_guard<py::gil_scoped_release>());
    m.def("select_L", &select_L, py::arg("gaps"), py::arg("family"),
          py::arg("L_min"), py::arg("L_max"), py::arg("options") = FitOptions{},
          py::call_guard<py::gil_scoped_release>());
    m.def("build_model_from_headway_fits", &build_model_from_headway_fits,
          py::arg("reports"));

    py::class_<ArrivalTimeline>(m, "ArrivalTimeline")
        .def(py::init<>())
        .def_static("merged", &ArrivalTimeline::merged, py::arg("times"))
        .def_readwrite("lanes", &ArrivalTimeline::lanes)
        .def("merged_times", &ArrivalTimeline::merged_times)
        .def("total_arrivals", &ArrivalTimeline::total_arrivals);

    py::class_<GapSample>(m, "GapSample")
        .def_readonly("gaps", &GapSample::gaps)
        .def_readonly("n_arrivals", &GapSample::n_arrivals)
        .def_readonly("n_zero", &GapSample::n_zero)
        .def_readonly("duration", &GapSample::duration);

    m.def("gaps_from_arrivals", &gaps_from_arrivals, py::arg("timeline"));
    m.def("simulate_component", &simulate_component, py::arg("model"),
          py::arg("horizon"), py::arg("seed"));
    m.def("simulate_superposed", &simulate_superposed, py::arg("model"),
          py::arg("horizon"), py::arg("seed"), py::arg("warmup") = -1.0,
          py::call_guard<py::gil_scoped_release>());

    py::class_<RenewalTestResult>(m, "RenewalTestResult")
        .def_readonly("statistic", &RenewalTestResult::statistic)
        .def_readonly("p_value", &RenewalTestResult::p_value)
        .def_readonly("n", &RenewalTestResult::n)
        .def_readonly("method", &RenewalTestResult::method)
        .def_readonly("alpha", &RenewalTestResult::alpha)
        .def_readonly("reject", &RenewalTestResult::reject);

    py::class_<GofResult>(m, "GofResult")
        .def_readonly("ks_statistic", &GofResult::ks_statistic)
        .def_readonly("p_value", &GofResult::p_value)
        .def_readonly("n", &GofResult::n);

    m.def("renewal_test", &renewal_test, py::arg("gaps"),
          py::arg("alpha") = 0.05);
    m.def("ks_gof", &ks_gof, py::arg("gaps"), py::arg("model"));

    m.def("model_to_json", &io::model_to_json, py::arg("model"));
    m.def("model_from_json", &io::model_from_json, py::arg("text"));
}
