#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cmcrot/curvature.hpp"
#include "cmcrot/existence.hpp"
#include "cmcrot/io.hpp"
#include "cmcrot/period.hpp"
#include "cmcrot/potential.hpp"
#include "cmcrot/profile.hpp"
#include "cmcrot/verify.hpp"

namespace py = pybind11;
using namespace cmcrot;

PYBIND11_MODULE(cmcrot, mod) {
    mod.doc() = "rotational hypersurfaces with constant m-th mean curvature in the "
                "(n+1)-sphere: potential analysis, period integrals, existence "
                "certificates and profile integration";

    py::class_<Params>(mod, "Params")
        .def(py::init<int, int, double>(), py::arg("n"), py::arg("m"), py::arg("H"))
        .def_readwrite("n", &Params::n)
        .def_readwrite("m", &Params::m)
        .def_readwrite("H", &Params::H)
        .def("validate", &Params::validate)
        .def("__repr__", [](const Params& p) {
            std::ostringstream os;
            os << "Params(n=" << p.n << ", m=" << p.m << ", H=" << p.H << ")";
            return os.str();
        });

    py::class_<CurvatureReport>(mod, "CurvatureReport")
        .def_readonly("H", &CurvatureReport::H)
        .def_readonly("S", &CurvatureReport::S)
        .def_readonly("R", &CurvatureReport::R);

    py::class_<CriticalData>(mod, "CriticalData")
        .def_readonly("v0", &CriticalData::v0)
        .def_readonly("c0", &CriticalData::c0)
        .def_readonly("a", &CriticalData::a)
        .def("__repr__", [](const CriticalData& c) {
            std::ostringstream os;
            os << "CriticalData(v0=" << c.v0 << ", c0=" << c.c0 << ", a=" << c.a << ")";
            return os.str();
        });

    py::class_<RootPair>(mod, "RootPair")
        .def_readonly("t1", &RootPair::t1)
        .def_readonly("t2", &RootPair::t2)
        .def_readonly("C", &RootPair::C);

    py::class_<PeriodBounds>(mod, "PeriodBounds")
        .def_readonly("A", &PeriodBounds::A)
        .def_readonly("B", &PeriodBounds::B);

    py::enum_<SolveOutcome>(mod, "SolveOutcome")
        .value("found", SolveOutcome::found)
        .value("not_found", SolveOutcome::not_found)
        .value("unreachable", SolveOutcome::unreachable);

    py::class_<ExistenceCertificate>(mod, "ExistenceCertificate")
        .def_readonly("outcome", &ExistenceCertificate::outcome)
        .def_readonly("C_star", &ExistenceCertificate::C_star)
        .def_readonly("P_achieved", &ExistenceCertificate::P_achieved)
        .def_readonly("residual", &ExistenceCertificate::residual)
        .def_readonly("target", &ExistenceCertificate::target)
        .def_readonly("bounds", &ExistenceCertificate::bounds)
        .def_readonly("bracket_lo", &ExistenceCertificate::bracket_lo)
        .def_readonly("bracket_hi", &ExistenceCertificate::bracket_hi)
        .def_readonly("scan", &ExistenceCertificate::scan);

    py::class_<ProfileSample>(mod, "ProfileSample")
        .def_readonly("s", &ProfileSample::s)
        .def_readonly("w", &ProfileSample::w)
        .def_readonly("w_dot", &ProfileSample::w_dot)
        .def_readonly("r", &ProfileSample::r)
        .def_readonly("lam", &ProfileSample::lambda)
        .def_readonly("mu", &ProfileSample::mu)
        .def_readonly("vartheta", &ProfileSample::vartheta)
        .def_readonly("theta", &ProfileSample::theta)
        .def_readonly("y", &ProfileSample::y)
        .def_readonly("energy_residual", &ProfileSample::energy_residual);

    py::class_<ClosureReport>(mod, "ClosureReport")
        .def_readonly("delta_theta", &ClosureReport::delta_theta)
        .def_readonly("w_mismatch", &ClosureReport::w_mismatch)
        .def_readonly("wdot_mismatch", &ClosureReport::wdot_mismatch)
        .def_readonly("max_energy_drift", &ClosureReport::max_energy_drift)
        .def_readonly("max_Hm_deviation", &ClosureReport::max_Hm_deviation);

    py::class_<CheckResult>(mod, "CheckResult")
        .def_readonly("suite", &CheckResult::suite)
        .def_readonly("id", &CheckResult::id)
        .def_readonly("passed", &CheckResult::pass)
        .def_readonly("residual", &CheckResult::residual)
        .def_readonly("seconds", &CheckResult::seconds)
        .def_readonly("note", &CheckResult::note);

    // symmetric functions and curvature relations
    mod.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    mod.def("elementary_symmetric", &elementary_symmetric, py::arg("lambdas"), py::arg("k"));
    mod.def("mth_mean_curvature", &mth_mean_curvature, py::arg("lambdas"), py::arg("m"));
    mod.def("mu_from_lambda", &mu_from_lambda, py::arg("params"), py::arg("lam"));
    mod.def("scalar_curvature", &scalar_curvature, py::arg("n"), py::arg("lambdas"));
    mod.def("h2_from_scalar", &h2_from_scalar, py::arg("R"), py::arg("n"));

    // the potential q and its critical data
    mod.def("lambda_of_v", &lambda_of_v, py::arg("params"), py::arg("v"));
    mod.def("q_eval", &q_eval, py::arg("params"), py::arg("C"), py::arg("v"));
    mod.def("q_prime", &q_prime, py::arg("params"), py::arg("v"));
    mod.def("q_double_prime", &q_double_prime, py::arg("params"), py::arg("v"));
    mod.def("critical_point", &critical_point, py::arg("params"),
            py::arg("root_tol") = 1e-12);
    mod.def("critical_closed_form", &critical_closed_form, py::arg("params"));
    mod.def("roots", &roots, py::arg("params"), py::arg("C"), py::arg("root_tol") = 1e-12);

    // periods and their limits
    mod.def("half_period_T", &half_period_T, py::arg("params"), py::arg("C"),
            py::arg("quad_tol") = 1e-10);
    mod.def("period_P", &period_P, py::arg("params"), py::arg("C"),
            py::arg("quad_tol") = 1e-10);
    mod.def("period_P_direct", &period_P_direct, py::arg("params"), py::arg("C"),
            py::arg("quad_tol") = 1e-10);
    mod.def("period_P_scaled", &period_P_scaled, py::arg("params"), py::arg("C"),
            py::arg("quad_tol") = 1e-10);
    mod.def("limit_at_c0", &limit_at_c0, py::arg("params"));
    mod.def("limit_at_infinity", &limit_at_infinity, py::arg("params"));
    mod.def("limit_at_c0_printed", &limit_at_c0_printed, py::arg("params"));
    mod.def("bounds", &bounds, py::arg("params"));

    // existence of closed solutions
    mod.def("admissible_range", &admissible_range, py::arg("n"), py::arg("m"), py::arg("k"));
    mod.def("solve_for_period", &solve_for_period, py::arg("params"), py::arg("target"),
            py::arg("C_max") = 0.0, py::arg("residual_tol") = 1e-9,
            py::arg("quad_tol") = 1e-10);
    mod.def(
        "exists_embedded",
        [](const Params& params, int k, double C_max, double residual_tol, double quad_tol) {
            return exists_embedded(ExistenceQuery{params, k}, C_max, residual_tol, quad_tol);
        },
        py::arg("params"), py::arg("k"), py::arg("C_max") = 0.0,
        py::arg("residual_tol") = 1e-9, py::arg("quad_tol") = 1e-10);

    // profile integration and closure diagnostics
    mod.def("integrate_profile", &integrate_profile, py::arg("params"), py::arg("C"),
            py::arg("k_periods"), py::arg("samples_per_period"),
            py::arg("ode_tol") = 1e-10, py::arg("quad_tol") = 1e-10);
    mod.def("curvatures_from_radius", &curvatures_from_radius, py::arg("r"),
            py::arg("r_dot"), py::arg("r_ddot"));
    mod.def("closure_check", &closure_check, py::arg("params"), py::arg("samples"),
            py::arg("k"));
    mod.def("curve_point", &curve_point, py::arg("vartheta"), py::arg("theta"));

    mod.def("run_verification", &run_verification, py::arg("suite_filter") = "",
            py::arg("seed") = 12345);

    mod.def("certificate_json",
            [](const Params& params, const ExistenceCertificate& cert) {
                return io::certificate_json(params, cert).dump(2);
            },
            py::arg("params"), py::arg("cert"),
            "the certificate as a JSON string (same schema as the CLI)");
}
