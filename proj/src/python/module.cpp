// Copyright 2026 The neit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "neit/acceptance.hpp"
#include "neit/atom.hpp"
#include "neit/bloch.hpp"
#include "neit/spectra.hpp"
#include "neit/version.hpp"

namespace py = pybind11;
using namespace neit;

namespace {

py::array_t<double> samples_array(const std::vector<Sample>& samples) {
  py::array_t<double> out({static_cast<py::ssize_t>(samples.size()),
                           static_cast<py::ssize_t>(3)});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    view(i, 0) = samples[i].axis;
    view(i, 1) = samples[i].re;
    view(i, 2) = samples[i].im;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_neit, m) {
  m.doc() = "Steady-state spectroscopy toolkit for a driven four-level N-type atom";
  m.attr("__version__") = kVersion;

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init([](double omega_a, double omega_b, double omega_c,
                       double delta_a, double delta_b, double delta_c,
                       double gamma_a, double gamma_b, double gamma_c) {
             SystemParams p{omega_a, omega_b, omega_c, delta_a, delta_b,
                            delta_c,  gamma_a, gamma_b, gamma_c};
             p.validate();
             return p;
           }),
           py::arg("omega_a") = 0.0, py::arg("omega_b") = 0.0,
           py::arg("omega_c") = 0.0, py::arg("delta_a") = 0.0,
           py::arg("delta_b") = 0.0, py::arg("delta_c") = 0.0,
           py::arg("gamma_a") = 1.0, py::arg("gamma_b") = 1.0,
           py::arg("gamma_c") = 1.0)
      .def_readwrite("omega_a", &SystemParams::omega_a)
      .def_readwrite("omega_b", &SystemParams::omega_b)
      .def_readwrite("omega_c", &SystemParams::omega_c)
      .def_readwrite("delta_a", &SystemParams::delta_a)
      .def_readwrite("delta_b", &SystemParams::delta_b)
      .def_readwrite("delta_c", &SystemParams::delta_c)
      .def_readwrite("gamma_a", &SystemParams::gamma_a)
      .def_readwrite("gamma_b", &SystemParams::gamma_b)
      .def_readwrite("gamma_c", &SystemParams::gamma_c)
      .def("validate", &SystemParams::validate);

  py::enum_<Branch>(m, "Branch")
      .value("plus", Branch::plus)
      .value("minus", Branch::minus);

  py::enum_<FormVariant>(m, "FormVariant")
      .value("corrected", FormVariant::corrected)
      .value("printed", FormVariant::printed);

  py::enum_<SweepAxis>(m, "SweepAxis")
      .value("delta_b", SweepAxis::delta_b)
      .value("gamma_c", SweepAxis::gamma_c)
      .value("omega_c", SweepAxis::omega_c);

  py::enum_<Method>(m, "Method")
      .value("numeric", Method::numeric)
      .value("analytic_full", Method::analytic_full)
      .value("analytic_approx", Method::analytic_approx);

  m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"));
  m.def("lambda_dark_state", &lambda_dark_state, py::arg("omega_a"),
        py::arg("omega_b"));
  m.def("dark_detunings", &dark_detunings, py::arg("delta_c"), py::arg("omega_c"));

  py::class_<MixingAngles>(m, "MixingAngles")
      .def_readonly("theta1", &MixingAngles::theta1)
      .def_readonly("theta2", &MixingAngles::theta2);

  py::class_<Eigensystem>(m, "Eigensystem")
      .def_readonly("eigenvalues", &Eigensystem::eigenvalues)
      .def_readonly("mixing_angles", &Eigensystem::mixing_angles)
      .def_property_readonly("eigenvectors", [](const Eigensystem& s) {
        Mat4 cols;
        for (int i = 0; i < 4; ++i) cols.col(i) = s.eigenvectors[i];
        return cols;
      });
  m.def("resonant_eigensystem", &resonant_eigensystem, py::arg("params"));
  m.def("resonant_quartic_residual", &resonant_quartic_residual,
        py::arg("lambda_"), py::arg("omega_a"), py::arg("omega_b"),
        py::arg("omega_c"));

  py::class_<DarkState>(m, "DarkState")
      .def_readonly("detuning", &DarkState::detuning)
      .def_readonly("state", &DarkState::state)
      .def_readonly("level2_leakage", &DarkState::level2_leakage);
  m.def("detuned_dark_state", &detuned_dark_state, py::arg("params"),
        py::arg("branch"));

  py::class_<DressedStates>(m, "DressedStates")
      .def_readonly("angle", &DressedStates::angle)
      .def_readonly("energy_3p", &DressedStates::energy_3p)
      .def_readonly("energy_4p", &DressedStates::energy_4p)
      .def_readonly("state_3p", &DressedStates::state_3p)
      .def_readonly("state_4p", &DressedStates::state_4p);
  m.def("dressed_states", &dressed_states, py::arg("delta_c"), py::arg("omega_c"));

  py::class_<Liouvillian>(m, "Liouvillian")
      .def_readonly("matrix", &Liouvillian::matrix)
      .def_readonly("has_dissipation", &Liouvillian::has_dissipation);
  m.def("build_liouvillian", &build_liouvillian, py::arg("params"));

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const Mat4& matrix) {
             DensityMatrix rho;
             rho.matrix = matrix;
             return rho;
           }),
           py::arg("matrix"))
      .def_static("pure", &DensityMatrix::pure, py::arg("level"))
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed)
      .def_readwrite("matrix", &DensityMatrix::matrix)
      .def_property_readonly("rho23", &DensityMatrix::rho23)
      .def("population", &DensityMatrix::population, py::arg("level"))
      .def("is_physical", &DensityMatrix::is_physical, py::arg("tol") = 1e-9);

  m.def(
      "steady_state",
      [](const SystemParams& p) { return steady_state(build_liouvillian(p)); },
      py::arg("params"));
  m.def(
      "rho23",
      [](const SystemParams& p) {
        return steady_state(build_liouvillian(p)).rho23();
      },
      py::arg("params"), "Steady-state rho23 for the given parameters");

  py::class_<EvolveResult>(m, "EvolveResult")
      .def_readonly("rho", &EvolveResult::rho)
      .def_readonly("converged", &EvolveResult::converged)
      .def_readonly("t_end", &EvolveResult::t_end)
      .def_readonly("rhs_norm", &EvolveResult::rhs_norm)
      .def_readonly("steps", &EvolveResult::steps);
  m.def("evolve_to_steady", &evolve_to_steady, py::arg("params"), py::arg("rho0"),
        py::arg("t_max"), py::arg("dt") = 1e-3, py::arg("settle_tol") = 1e-10);
  m.def(
      "lindblad_rhs",
      [](const SystemParams& p, const Mat4& rho) {
        return lindblad_rhs(build_liouvillian(p), rho);
      },
      py::arg("params"), py::arg("rho"));

  py::class_<NormalizedPoint>(m, "NormalizedPoint")
      .def(py::init([](double g_a, double g_b, double g_c, double delta_b) {
             return NormalizedPoint{g_a, g_b, g_c, delta_b};
           }),
           py::arg("g_a"), py::arg("g_b"), py::arg("g_c"), py::arg("delta_b"))
      .def_readwrite("g_a", &NormalizedPoint::g_a)
      .def_readwrite("g_b", &NormalizedPoint::g_b)
      .def_readwrite("g_c", &NormalizedPoint::g_c)
      .def_readwrite("delta_b", &NormalizedPoint::delta_b)
      .def("delta_plus", &NormalizedPoint::delta_plus)
      .def("delta_minus", &NormalizedPoint::delta_minus)
      .def("kappa", &NormalizedPoint::kappa)
      .def("zeta", &NormalizedPoint::zeta);

  py::class_<AnalyticValue>(m, "AnalyticValue")
      .def_readonly("value", &AnalyticValue::value)
      .def_readonly("in_regime", &AnalyticValue::in_regime);
  py::class_<AnalyticReal>(m, "AnalyticReal")
      .def_readonly("value", &AnalyticReal::value)
      .def_readonly("in_regime", &AnalyticReal::in_regime);

  m.def("rho23_full", &rho23_full, py::arg("point"),
        py::arg("variant") = kDefaultVariant);
  m.def("rho23_approx", &rho23_approx, py::arg("point"),
        py::arg("variant") = kDefaultVariant);
  m.def("im_rho23_resonant", &im_rho23_resonant, py::arg("kappa"), py::arg("zeta"),
        py::arg("g_a"));
  m.def("im_rho23_window", &im_rho23_window, py::arg("kappa"), py::arg("zeta"),
        py::arg("g_a"), py::arg("Gamma"));
  m.def("im_rho23_peak", &im_rho23_peak, py::arg("kappa"), py::arg("zeta"),
        py::arg("g_a"), py::arg("Gamma"));

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init([](const SystemParams& base, SweepAxis axis, double min,
                       double max, int n_points, Method method,
                       FormVariant variant) {
             SweepSpec s{base, axis, min, max, n_points, method, variant};
             s.validate();
             return s;
           }),
           py::arg("base"), py::arg("axis") = SweepAxis::delta_b,
           py::arg("min") = -10.0, py::arg("max") = 10.0,
           py::arg("n_points") = 2001, py::arg("method") = Method::numeric,
           py::arg("variant") = kDefaultVariant)
      .def_readwrite("base", &SweepSpec::base)
      .def_readwrite("axis", &SweepSpec::axis)
      .def_readwrite("min", &SweepSpec::min)
      .def_readwrite("max", &SweepSpec::max)
      .def_readwrite("n_points", &SweepSpec::n_points)
      .def_readwrite("method", &SweepSpec::method)
      .def_readwrite("variant", &SweepSpec::variant);

  py::class_<Window>(m, "Window")
      .def_readonly("location", &Window::location)
      .def_readonly("depth", &Window::depth)
      .def_readonly("width", &Window::width);
  py::class_<Peak>(m, "Peak")
      .def_readonly("location", &Peak::location)
      .def_readonly("height", &Peak::height);
  py::class_<PointFailure>(m, "PointFailure")
      .def_readonly("axis", &PointFailure::axis)
      .def_readonly("message", &PointFailure::message);

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly(
          "samples", [](const Spectrum& s) { return samples_array(s.samples); },
          "(n, 3) array of (axis, Re rho23, Im rho23)")
      .def_readonly("windows", &Spectrum::windows)
      .def_readonly("peaks", &Spectrum::peaks)
      .def_readonly("failures", &Spectrum::failures);
  m.def("sweep", &sweep, py::arg("spec"));

  py::class_<LinearFit>(m, "LinearFit")
      .def_readonly("slope", &LinearFit::slope)
      .def_readonly("r_squared", &LinearFit::r_squared)
      .def_readonly("n_points", &LinearFit::n_points);
  py::class_<GammaScan>(m, "GammaScan")
      .def_property_readonly(
          "points", [](const GammaScan& s) { return samples_array(s.points); })
      .def_readonly("fit", &GammaScan::fit)
      .def_readonly("failures", &GammaScan::failures);
  m.def("gamma_c_scan", &gamma_c_scan, py::arg("base"), py::arg("gammas"),
        py::arg("at_detuning"));

  py::class_<CollapseReport>(m, "CollapseReport")
      .def_readonly("small_spectrum", &CollapseReport::small_spectrum)
      .def_readonly("ref_spectrum", &CollapseReport::ref_spectrum)
      .def_readonly("gamma_c_small", &CollapseReport::gamma_c_small)
      .def_readonly("gamma_c_ref", &CollapseReport::gamma_c_ref)
      .def_readonly("ratio", &CollapseReport::ratio)
      .def_readonly("contrast_small", &CollapseReport::contrast_small)
      .def_readonly("contrast_ref", &CollapseReport::contrast_ref);
  m.def("collapse_analysis", &collapse_analysis, py::arg("base"),
        py::arg("gamma_c_small"), py::arg("gamma_c_ref"),
        py::arg("n_points") = 2001);

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("pass_", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail);
  m.def("run_acceptance", &run_acceptance, py::arg("filter") = "all");
}
