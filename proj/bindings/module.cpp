#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xilab/claims.hpp"
#include "xilab/fourier.hpp"
#include "xilab/report.hpp"
#include "xilab/theta.hpp"
#include "xilab/xi.hpp"
#include "xilab/zeros.hpp"

namespace py = pybind11;
using namespace xilab;

PYBIND11_MODULE(_xilab, m) {
  m.doc() = "Theta-kernel xi workbench core";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ToleranceError>(m, "ToleranceError",
                                         PyExc_ArithmeticError);
  py::register_exception<NoSignChangeError>(m, "NoSignChangeError",
                                            PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError",
                                           PyExc_RuntimeError);

  py::class_<TruncatedSum>(m, "TruncatedSum")
      .def_readonly("value", &TruncatedSum::value)
      .def_readonly("tail_bound", &TruncatedSum::tail_bound)
      .def_readonly("terms_used", &TruncatedSum::terms_used)
      .def("__repr__", [](const TruncatedSum& s) {
        return "TruncatedSum(value=" + std::to_string(s.value) + ")";
      });

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("err_estimate", &QuadratureResult::err_estimate)
      .def_readonly("panels", &QuadratureResult::panels)
      .def("__repr__", [](const QuadratureResult& r) {
        return "QuadratureResult(value=" + std::to_string(r.value) + ")";
      });

  py::class_<WindowParams>(m, "WindowParams")
      .def(py::init([](double sigma, double t2, double t0) {
             return WindowParams{sigma, t2, t0};
           }),
           py::arg("sigma") = 0.25, py::arg("t2") = 1.0, py::arg("t0") = 0.5)
      .def_readwrite("sigma", &WindowParams::sigma)
      .def_readwrite("t2", &WindowParams::t2)
      .def_readwrite("t0", &WindowParams::t0);

  py::class_<CrossingRecord>(m, "CrossingRecord")
      .def_readonly("sigma", &CrossingRecord::sigma)
      .def_readonly("t2", &CrossingRecord::t2)
      .def_readonly("t0", &CrossingRecord::t0)
      .def_readonly("omega_z", &CrossingRecord::omega_z)
      .def_readonly("slope", &CrossingRecord::slope)
      .def_readonly("bracket", &CrossingRecord::bracket)
      .def_readonly("degenerate", &CrossingRecord::degenerate)
      .def_readonly("step_too_coarse", &CrossingRecord::step_too_coarse);

  py::enum_<ClaimStatus>(m, "ClaimStatus")
      .value("passed", ClaimStatus::pass)
      .value("failed", ClaimStatus::fail)
      .value("informational", ClaimStatus::informational);

  py::class_<ClaimResult>(m, "ClaimResult")
      .def_readonly("claim_id", &ClaimResult::claim_id)
      .def_readonly("measured", &ClaimResult::measured)
      .def_readonly("expected", &ClaimResult::expected)
      .def_readonly("tolerance", &ClaimResult::tolerance)
      .def_readonly("status", &ClaimResult::status)
      .def_readonly("detail", &ClaimResult::detail);

  m.def("theta_w",
        [](double x, double tol) { return theta_w(x, tol); },
        py::arg("x"), py::arg("tol") = 1e-15);
  m.def("jacobi_identity_residual", &jacobi_identity_residual, py::arg("x"));
  m.def("e0", [](double t) { return e0(t); }, py::arg("t"));
  m.def("e0_log", &e0_log, py::arg("t"));
  m.def("e0_log_deriv", &e0_log_deriv, py::arg("t"));
  m.def("de0_dt", [](double t) { return de0_dt(t); }, py::arg("t"));
  m.def("e0_shift_diff",
        [](double t, double t2) { return e0_shift_diff(t, t2); },
        py::arg("t"), py::arg("t2"));

  m.def("xi",
        [](std::complex<double> s, double tol) { return xi_direct(s, tol); },
        py::arg("s"), py::arg("tol") = 1e-12);
  m.def("xi_critical_line", &xi_critical_line, py::arg("omega"));
  m.def("find_critical_zero", &find_critical_zero, py::arg("lo"),
        py::arg("hi"), py::arg("tol") = 1e-9);

  m.def("ep_omega",
        [](double sigma, double omega, double tol) {
          return ep_omega(StripPoint{sigma, omega}, tol);
        },
        py::arg("sigma"), py::arg("omega"), py::arg("tol") = 1e-11);
  m.def("gr",
        [](double omega, const WindowParams& w, double tol) {
          return gr(omega, w, tol);
        },
        py::arg("omega"), py::arg("window") = WindowParams{},
        py::arg("tol") = 1e-10);
  m.def("fr_convolution",
        [](double omega, const WindowParams& w, double tol) {
          return fr_convolution(omega, w, tol);
        },
        py::arg("omega"), py::arg("window") = WindowParams{},
        py::arg("tol") = 1e-7);
  m.def("f_omega",
        [](double omega, const WindowParams& w, double tol) {
          return f_omega(omega, w, tol);
        },
        py::arg("omega"), py::arg("window") = WindowParams{},
        py::arg("tol") = 1e-10);

  m.def("first_crossing",
        [](const WindowParams& w, double omega_max, double step, double tol) {
          return first_crossing(w, omega_max, step, tol);
        },
        py::arg("window") = WindowParams{}, py::arg("omega_max") = 50.0,
        py::arg("step") = 0.05, py::arg("tol") = 1e-9);
  m.def("podd",
        [](double omega, const WindowParams& w, double tol) {
          return podd(omega, w, tol);
        },
        py::arg("omega"), py::arg("window") = WindowParams{},
        py::arg("tol") = 1e-10);

  m.def("contradiction_integral",
        [](double sigma, double t0c, double tol) {
          return contradiction_integral(sigma, t0c, tol);
        },
        py::arg("sigma"), py::arg("t0c"), py::arg("tol") = 1e-12);
  m.def("a_of_y", [](double y) { return a_of_y(y); }, py::arg("y"));

  m.def("verify",
        [](const std::string& suite) {
          const auto doc = run_verify(RunConfig::defaults(), suite);
          return doc.claims;
        },
        py::arg("suite") = "");
}
