// Python bindings for the core force, material, and analysis operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir/analysis.hpp"
#include "casimir/config.hpp"
#include "casimir/force.hpp"
#include "casimir/units.hpp"

namespace py = pybind11;
using namespace casimir;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Casimir force between dispersive magnetodielectric stacks "
              "(reduced Lifshitz-type integrals; positive = attractive)";

    m.attr("HBAR_C_EV_NM") = hbar_c_ev_nm;
    m.attr("K_BOLTZMANN_EV_PER_K") = k_boltzmann_ev_per_k;
    m.attr("INFINITE_RESPONSE") = infinite_response;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                             PyExc_RuntimeError);

    py::class_<ReferenceScale>(m, "ReferenceScale")
        .def(py::init<double>(), py::arg("plasma_energy_ev"))
        .def_readonly("plasma_energy_ev", &ReferenceScale::plasma_energy_ev);

    m.def("length_unit_nm", &length_unit_nm, py::arg("scale"));
    m.def("force_unit_si", &force_unit_si, py::arg("scale"));
    m.def("distance_si_um", &distance_si_um, py::arg("scale"),
          py::arg("d_reduced"));
    m.def("reduced_temperature", &reduced_temperature, py::arg("scale"),
          py::arg("kelvin"));

    py::class_<OscillatorParams>(m, "OscillatorParams")
        .def(py::init<double, double, double>(), py::arg("omega_p"),
             py::arg("omega_t"), py::arg("gamma"))
        .def_static("from_relative", &OscillatorParams::from_relative,
                    py::arg("p"), py::arg("q"), py::arg("gamma_over_omega_t"))
        .def_readonly("omega_p", &OscillatorParams::omega_p)
        .def_readonly("omega_t", &OscillatorParams::omega_t)
        .def_readonly("gamma", &OscillatorParams::gamma);

    m.def("response_at_imag_freq", &response_at_imag_freq, py::arg("params"),
          py::arg("xi"));
    m.def("static_value",
          static_cast<double (*)(const OscillatorParams&)>(&static_value),
          py::arg("params"));

    py::class_<Response>(m, "Response")
        .def(py::init<>())
        .def_static("constant", &Response::constant, py::arg("value"))
        .def_static("oscillator", &Response::oscillator, py::arg("params"))
        .def("at", &Response::at, py::arg("xi"))
        .def("static_value", &Response::static_value)
        .def_property_readonly("is_constant", &Response::is_constant)
        .def_property_readonly("is_dispersive", &Response::is_dispersive)
        .def_property_readonly("params", &Response::params);

    py::class_<MaterialModel>(m, "MaterialModel")
        .def(py::init<>())
        .def_static("vacuum", &MaterialModel::vacuum)
        .def_readwrite("electric", &MaterialModel::electric)
        .def_readwrite("magnetic", &MaterialModel::magnetic)
        .def("is_vacuum", &MaterialModel::is_vacuum);

    py::class_<Layer>(m, "Layer")
        .def(py::init([](const MaterialModel& material, double thickness) {
                 return Layer{material, thickness};
             }),
             py::arg("material"), py::arg("thickness"))
        .def_readwrite("material", &Layer::material)
        .def_readwrite("thickness", &Layer::thickness);

    py::class_<LayerStack>(m, "LayerStack")
        .def(py::init<>())
        .def_static("half_space", &LayerStack::half_space, py::arg("material"))
        .def_readwrite("terminator", &LayerStack::terminator)
        .def_readwrite("layers", &LayerStack::layers)
        .def("validate", &LayerStack::validate);

    py::class_<CavityConfig>(m, "CavityConfig")
        .def(py::init<LayerStack, LayerStack, double>(), py::arg("left"),
             py::arg("right"), py::arg("gap"))
        .def_readwrite("left", &CavityConfig::left)
        .def_readwrite("right", &CavityConfig::right)
        .def_readwrite("gap", &CavityConfig::gap);

    py::class_<QuadratureSettings>(m, "QuadratureSettings")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureSettings::rel_tol)
        .def_readwrite("x_max", &QuadratureSettings::x_max)
        .def_readwrite("max_subdivisions", &QuadratureSettings::max_subdivisions)
        .def_readwrite("matsubara_term_tol",
                       &QuadratureSettings::matsubara_term_tol)
        .def_readwrite("max_matsubara_terms",
                       &QuadratureSettings::max_matsubara_terms);

    py::class_<ForceResult>(m, "ForceResult")
        .def_readonly("f_over_f0", &ForceResult::f_over_f0)
        .def_readonly("f_over_fid", &ForceResult::f_over_fid)
        .def_readonly("est_error", &ForceResult::est_error)
        .def_readonly("evaluations", &ForceResult::evaluations)
        .def_readonly("matsubara_terms", &ForceResult::matsubara_terms)
        .def("__repr__", [](const ForceResult& r) {
            return "ForceResult(f_over_f0=" + std::to_string(r.f_over_f0) +
                   ", f_over_fid=" + std::to_string(r.f_over_fid) + ")";
        });

    m.def("force_T0_polar", &force_T0_polar, py::arg("config"),
          py::arg("settings") = QuadratureSettings{},
          py::call_guard<py::gil_scoped_release>());
    m.def("force_T0_cartesian", &force_T0_cartesian, py::arg("config"),
          py::arg("settings") = QuadratureSettings{},
          py::call_guard<py::gil_scoped_release>());
    m.def("force_finite_T", &force_finite_T, py::arg("config"), py::arg("t"),
          py::arg("settings") = QuadratureSettings{},
          py::call_guard<py::gil_scoped_release>());
    m.def("matsubara_term", &matsubara_term, py::arg("config"), py::arg("m"),
          py::arg("t"), py::arg("settings") = QuadratureSettings{},
          py::call_guard<py::gil_scoped_release>());

    m.def("apply_parameter", &apply_parameter, py::arg("config"),
          py::arg("path"), py::arg("value"));

    py::class_<ScanPoint>(m, "ScanPoint")
        .def_readonly("a1", &ScanPoint::a1)
        .def_readonly("a2", &ScanPoint::a2)
        .def_readonly("f_over_fid", &ScanPoint::f_over_fid)
        .def_readonly("f_over_f0", &ScanPoint::f_over_f0)
        .def_readonly("est_error", &ScanPoint::est_error)
        .def_readonly("evaluations", &ScanPoint::evaluations)
        .def_readonly("ok", &ScanPoint::ok)
        .def_readonly("error", &ScanPoint::error);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("axis1", &ScanResult::axis1)
        .def_readonly("axis2", &ScanResult::axis2)
        .def_readonly("points", &ScanResult::points);

    m.def(
        "distance_scan",
        [](const CavityConfig& config, const std::vector<double>& d_grid,
           std::optional<double> temperature, const QuadratureSettings& quad,
           unsigned threads) {
            py::gil_scoped_release release;
            return distance_scan(config, d_grid, temperature, quad, threads);
        },
        py::arg("config"), py::arg("d_grid"),
        py::arg("temperature") = std::nullopt,
        py::arg("quad") = QuadratureSettings{}, py::arg("threads") = 0);

    m.def(
        "sweep_2d",
        [](const CavityConfig& base, const std::string& axis1,
           const std::string& axis2, const std::vector<double>& values1,
           const std::vector<double>& values2, std::optional<double> temperature,
           const QuadratureSettings& quad, unsigned threads) {
            SweepSpec spec{base, axis1, axis2, values1, values2, temperature,
                           quad};
            py::gil_scoped_release release;
            return sweep_2d(spec, threads);
        },
        py::arg("base"), py::arg("axis1"), py::arg("axis2"), py::arg("values1"),
        py::arg("values2"), py::arg("temperature") = std::nullopt,
        py::arg("quad") = QuadratureSettings{}, py::arg("threads") = 0);

    m.def(
        "crossover_distance",
        [](const CavityConfig& config, double d_lo, double d_hi, double tol_d,
           std::optional<double> temperature, const QuadratureSettings& quad) {
            py::gil_scoped_release release;
            return crossover_distance(config, d_lo, d_hi, tol_d, temperature,
                                      quad);
        },
        py::arg("config"), py::arg("d_lo"), py::arg("d_hi"),
        py::arg("tol_d") = 0.5, py::arg("temperature") = std::nullopt,
        py::arg("quad") = QuadratureSettings{});

    m.def(
        "extremal_repulsion",
        [](const CavityConfig& config, double d_lo, double d_hi, double tol_d,
           std::optional<double> temperature, const QuadratureSettings& quad) {
            py::gil_scoped_release release;
            return extremal_repulsion(config, d_lo, d_hi, tol_d, temperature,
                                      quad);
        },
        py::arg("config"), py::arg("d_lo"), py::arg("d_hi"),
        py::arg("tol_d") = 0.5, py::arg("temperature") = std::nullopt,
        py::arg("quad") = QuadratureSettings{});

    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("scale", &RunConfig::scale)
        .def_readonly("cavity", &RunConfig::cavity)
        .def_readonly("temperature_kelvin", &RunConfig::temperature_kelvin)
        .def_readonly("quad", &RunConfig::quad);

    m.def("parse_config", &parse_config, py::arg("text"));
}
