#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uniexp/uniexp.hpp"

namespace py = pybind11;
using namespace uniexp;

namespace {

SolverOptions make_options(double tol, int max_iter, double gamma, const std::string& init,
                           const std::vector<double>& warm_nodes) {
    SolverOptions opts;
    opts.eq_tolerance = tol;
    opts.max_iterations = max_iter;
    opts.rescale_exponent = gamma;
    if (init == "auto") opts.init = Init::Auto;
    else if (init == "chebyshev") opts.init = Init::Chebyshev;
    else if (init == "uniform-limit") opts.init = Init::UniformLimit;
    else if (init == "warm") opts.init = Init::Warm;
    else throw std::invalid_argument("init must be auto|chebyshev|uniform-limit|warm");
    opts.warm_nodes = warm_nodes;
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Unitary rational best approximations to e^{i omega x} on [-1,1]";

    py::register_exception<InfeasibleFrequencyError>(m, "InfeasibleFrequencyError");

    py::class_<UnitaryBarycentric>(m, "UnitaryBarycentric")
        .def(py::init<double, std::vector<double>, std::vector<double>>(), py::arg("omega"),
             py::arg("support_nodes"), py::arg("rotated_weights"))
        .def_property_readonly("degree", &UnitaryBarycentric::degree)
        .def_property_readonly("omega", &UnitaryBarycentric::omega)
        .def_property_readonly("support_nodes", &UnitaryBarycentric::support_nodes)
        .def_property_readonly("rotated_weights", &UnitaryBarycentric::rotated_weights)
        .def("__call__", [](const UnitaryBarycentric& b, double x) { return eval_barycentric(b, x); })
        .def("__repr__", [](const UnitaryBarycentric& b) {
            return "<UnitaryBarycentric n=" + std::to_string(b.degree()) +
                   " omega=" + std::to_string(b.omega()) + ">";
        });

    py::class_<StructuralReport>(m, "StructuralReport")
        .def_readonly("unitarity_defect", &StructuralReport::unitarity_defect)
        .def_readonly("symmetry_defect", &StructuralReport::symmetry_defect)
        .def_readonly("stability_ok", &StructuralReport::stability_ok)
        .def_readonly("irreducible_ok", &StructuralReport::irreducible_ok);

    py::class_<BestApproximation>(m, "BestApproximation")
        .def_readonly("approximant", &BestApproximation::approximant)
        .def_readonly("interpolation_nodes", &BestApproximation::interpolation_nodes)
        .def_readonly("equioscillation_points", &BestApproximation::equioscillation_points)
        .def_readonly("extrema_values", &BestApproximation::extrema_values)
        .def_readonly("max_error", &BestApproximation::max_error)
        .def_readonly("estimate", &BestApproximation::estimate)
        .def_readonly("deviation", &BestApproximation::deviation)
        .def_readonly("iterations", &BestApproximation::iterations)
        .def_readonly("converged", &BestApproximation::converged)
        .def_readonly("near_degenerate", &BestApproximation::near_degenerate);

    py::class_<LawsonResult>(m, "LawsonResult")
        .def_readonly("approximant", &LawsonResult::approximant)
        .def_readonly("iterations", &LawsonResult::iterations)
        .def_readonly("grid_error", &LawsonResult::grid_error);

    py::class_<EquioscillationReport>(m, "EquioscillationReport")
        .def_property_readonly("extrema",
                               [](const EquioscillationReport& r) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& e : r.extrema) out.emplace_back(e.x, e.value);
                                   return out;
                               })
        .def_readonly("zeros", &EquioscillationReport::zeros)
        .def_readonly("deviation", &EquioscillationReport::deviation)
        .def_readonly("alternating", &EquioscillationReport::alternating)
        .def_readonly("first_sign_positive", &EquioscillationReport::first_sign_positive)
        .def_readonly("zero_count_ok", &EquioscillationReport::zero_count_ok);

    m.def(
        "best_approx",
        [](int n, double omega, double tol, int max_iter, double gamma, const std::string& init,
           const std::vector<double>& warm_nodes) {
            return best_approx(n, omega, make_options(tol, max_iter, gamma, init, warm_nodes));
        },
        py::arg("n"), py::arg("omega"), py::arg("tol") = 1e-3, py::arg("max_iter") = 200,
        py::arg("gamma") = 1.0, py::arg("init") = "auto",
        py::arg("warm_nodes") = std::vector<double>{},
        "Unitary rational best approximation to e^{i omega x} of degree (n,n)");

    m.def(
        "sweep",
        [](int n, const std::vector<double>& omegas, double tol, int max_iter) {
            SolverOptions opts;
            opts.eq_tolerance = tol;
            opts.max_iterations = max_iter;
            return sweep(n, omegas, opts);
        },
        py::arg("n"), py::arg("omegas"), py::arg("tol") = 1e-3, py::arg("max_iter") = 200,
        "Warm-started solves over an ascending frequency list");

    m.def(
        "interpolate_unitary",
        [](double omega, const std::vector<double>& nodes) {
            return interpolate_unitary(omega, NodeSet(nodes)).approximant;
        },
        py::arg("omega"), py::arg("nodes"),
        "Unitary rational interpolant at 2n+1 prescribed nodes");

    m.def(
        "interpolate_cheb",
        [](int n, double omega) {
            return interpolate_unitary(omega, NodeSet(chebyshev_nodes(2 * n + 1))).approximant;
        },
        py::arg("n"), py::arg("omega"), "Unitary rational interpolant at 2n+1 Chebyshev nodes");

    m.def(
        "aaa_lawson_cheb",
        [](int n, double omega, int grid_size, int iterations) {
            LawsonOptions opts;
            opts.grid_size = grid_size;
            opts.iterations = iterations;
            return aaa_lawson_cheb(n, omega, opts);
        },
        py::arg("n"), py::arg("omega"), py::arg("grid_size") = 2000, py::arg("iterations") = 50,
        "AAA-Lawson iteration with fixed Chebyshev support nodes");

    m.def("chebyshev_nodes", &chebyshev_nodes, py::arg("m"));
    m.def(
        "derived_weights", [](const UnitaryBarycentric& b) { return derived_weights(b); },
        py::arg("b"));
    m.def("eval_barycentric", &eval_barycentric, py::arg("b"), py::arg("x"));
    m.def("phase_error", &phase_error, py::arg("b"), py::arg("x"));
    m.def("poles", &poles, py::arg("b"));
    m.def("structural_checks", &structural_checks, py::arg("b"), py::arg("grid_size") = 1024);

    m.def("pade_denominator", &pade_denominator, py::arg("n"));
    m.def("pade_poles", &pade_poles, py::arg("n"));
    m.def("pade_eval", py::overload_cast<int, Complex>(&pade_eval), py::arg("n"), py::arg("z"));
    m.def("pade_error_bound", &pade_error_bound, py::arg("n"), py::arg("omega"));
    m.def("best_error_estimate", &best_error_estimate, py::arg("n"), py::arg("omega"));
    m.def(
        "superlinear_thresholds",
        [](int n) {
            auto t = superlinear_thresholds(n);
            return std::make_pair(t.bound_based, t.estimate_based);
        },
        py::arg("n"));

    m.def(
        "sup_error",
        [](const UnitaryBarycentric& b, int coarse) {
            auto s = sup_error(make_evaluator(b), b.omega(), coarse);
            return std::make_pair(s.value, s.argmax);
        },
        py::arg("b"), py::arg("coarse") = 4096,
        "(value, argmax) of |r(ix) - e^{i omega x}| over [-1,1]");
    m.def(
        "sup_error_pade",
        [](int n, double omega, int coarse) {
            return sup_error(make_pade_evaluator(n, omega), omega, coarse).value;
        },
        py::arg("n"), py::arg("omega"), py::arg("coarse") = 4096);
    m.def(
        "sup_error_cheb_quotient",
        [](int n, double omega, int coarse) {
            return sup_error(make_evaluator(cheb_quotient_baseline(n, omega)), omega, coarse).value;
        },
        py::arg("n"), py::arg("omega"), py::arg("coarse") = 4096);

    m.def(
        "equioscillation_report",
        [](const UnitaryBarycentric& b, int n) {
            return equioscillation_report(make_evaluator(b), b.omega(), n);
        },
        py::arg("b"), py::arg("n"));

    m.def(
        "error_curve",
        [](const UnitaryBarycentric& b, int m_samples) {
            auto curve = error_curve(make_evaluator(b), b.omega(), m_samples);
            std::vector<std::array<double, 5>> rows;
            rows.reserve(curve.samples.size());
            for (const auto& s : curve.samples)
                rows.push_back({s.x, s.re_err, s.im_err, s.abs_err, s.phase_err});
            return rows;
        },
        py::arg("b"), py::arg("m"), "Rows (x, re_err, im_err, abs_err, phase_err)");
}
