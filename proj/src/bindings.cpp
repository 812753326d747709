#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evanwave/grid.hpp"
#include "evanwave/layered.hpp"
#include "evanwave/oracle.hpp"
#include "evanwave/verify.hpp"
#include "evanwave/waveguide.hpp"
#include "evanwave/wkb.hpp"

namespace py = pybind11;

using namespace evanwave;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Evanescent-wave numerics: complex-phase WKB decomposition, "
            "waveguide dispersion, total reflection, and a brute-force "
            "scattering oracle";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<Grid1D>(m, "Grid1D")
      .def(py::init<double, double, std::size_t>(), py::arg("x_min"),
           py::arg("x_max"), py::arg("n_points"))
      .def_property_readonly("x_min", &Grid1D::x_min)
      .def_property_readonly("x_max", &Grid1D::x_max)
      .def_property_readonly("n", &Grid1D::size)
      .def_property_readonly("spacing", &Grid1D::spacing)
      .def("x", &Grid1D::x, py::arg("i"))
      .def("__len__", &Grid1D::size);

  py::class_<RealField1D>(m, "RealField1D")
      .def(py::init<Grid1D, std::vector<double>>(), py::arg("grid"),
           py::arg("values"))
      .def_property_readonly("grid", &RealField1D::grid)
      .def_property_readonly("values", [](const RealField1D& f) {
        return std::vector<double>(f.values().begin(), f.values().end());
      });

  py::class_<ComplexField1D>(m, "ComplexField1D")
      .def(py::init<Grid1D, std::vector<std::complex<double>>>(), py::arg("grid"),
           py::arg("values"))
      .def_property_readonly("grid", &ComplexField1D::grid)
      .def_property_readonly("values", [](const ComplexField1D& f) {
        return std::vector<std::complex<double>>(f.values().begin(),
                                                 f.values().end());
      });

  py::class_<PotentialProfile>(m, "PotentialProfile")
      .def(py::init<Grid1D, std::vector<double>>(), py::arg("grid"), py::arg("v"))
      .def_property_readonly("grid", &PotentialProfile::grid)
      .def_property_readonly("v", [](const PotentialProfile& p) {
        return std::vector<double>(p.v().begin(), p.v().end());
      });

  // --- wkb ---

  py::class_<wkb::PhaseSplit>(m, "PhaseSplit")
      .def_readonly("s_real", &wkb::PhaseSplit::s_real)
      .def_readonly("s_imag", &wkb::PhaseSplit::s_imag);

  py::class_<wkb::ClassicalResidual>(m, "ClassicalResidual")
      .def_readonly("real_equation", &wkb::ClassicalResidual::real_equation)
      .def_readonly("imag_equation", &wkb::ClassicalResidual::imag_equation);

  py::class_<wkb::QuantumResidual>(m, "QuantumResidual")
      .def_readonly("real_equation", &wkb::QuantumResidual::real_equation)
      .def_readonly("imag_equation", &wkb::QuantumResidual::imag_equation);

  py::enum_<wkb::RegionKind>(m, "RegionKind")
      .value("Allowed", wkb::RegionKind::Allowed)
      .value("Forbidden", wkb::RegionKind::Forbidden)
      .value("TurningPoint", wkb::RegionKind::TurningPoint);

  py::class_<wkb::Region>(m, "Region")
      .def_readonly("first", &wkb::Region::first)
      .def_readonly("last", &wkb::Region::last)
      .def_readonly("x_begin", &wkb::Region::x_begin)
      .def_readonly("x_end", &wkb::Region::x_end)
      .def_readonly("kind", &wkb::Region::kind);

  py::class_<wkb::RegionClassification>(m, "RegionClassification")
      .def_readonly("regions", &wkb::RegionClassification::regions);

  py::class_<wkb::ActionPair>(m, "ActionPair")
      .def_readonly("euclidean", &wkb::ActionPair::euclidean)
      .def_readonly("lorentzian", &wkb::ActionPair::lorentzian);

  m.def("split_phase", &wkb::split_phase, py::arg("psi"), py::arg("prefactor"),
        py::arg("hbar") = 1.0);
  m.def("hj_residual_classical", &wkb::hj_residual_classical, py::arg("s_real"),
        py::arg("s_imag"), py::arg("potential"));
  m.def("hj_residual_quantum", &wkb::hj_residual_quantum, py::arg("prefactor"),
        py::arg("s_real"), py::arg("s_imag"), py::arg("potential"),
        py::arg("hbar") = 1.0);
  m.def("classify_regions", &wkb::classify_regions, py::arg("potential"),
        py::arg("tol_scale") = 1e-12);
  m.def(
      "wkb_action",
      [](const PotentialProfile& v, std::size_t first, std::size_t last,
         double tol_scale) { return wkb::wkb_action(v, first, last, tol_scale); },
      py::arg("potential"), py::arg("first"), py::arg("last"),
      py::arg("tol_scale") = 1e-12);
  m.def(
      "imaginary_time_lapse",
      [](const PotentialProfile& v, std::size_t first, std::size_t last, double d_e,
         double tol_scale) {
        return wkb::imaginary_time_lapse(v, first, last, d_e, tol_scale);
      },
      py::arg("potential"), py::arg("first"), py::arg("last"), py::arg("d_e"),
      py::arg("tol_scale") = 1e-12);

  // --- waveguide ---

  py::class_<waveguide::ModeSpec>(m, "ModeSpec")
      .def(py::init<double, double, int, int>(), py::arg("a"), py::arg("b"),
           py::arg("n1"), py::arg("n2"))
      .def_readonly("a", &waveguide::ModeSpec::a)
      .def_readonly("b", &waveguide::ModeSpec::b)
      .def_readonly("n1", &waveguide::ModeSpec::n1)
      .def_readonly("n2", &waveguide::ModeSpec::n2);

  py::class_<waveguide::DispersionPoint>(m, "DispersionPoint")
      .def_readonly("omega", &waveguide::DispersionPoint::omega)
      .def_readonly("omega_c", &waveguide::DispersionPoint::omega_c)
      .def_readonly("k", &waveguide::DispersionPoint::k)
      .def_readonly("v_p", &waveguide::DispersionPoint::v_p)
      .def_readonly("v_g", &waveguide::DispersionPoint::v_g);

  py::class_<waveguide::ModeWavefunction>(m, "ModeWavefunction")
      .def("__call__", &waveguide::ModeWavefunction::operator(), py::arg("x"),
           py::arg("y"), py::arg("z"));

  m.def("cutoff_frequency", &waveguide::cutoff_frequency, py::arg("mode"));
  m.def("axial_wavenumber", &waveguide::axial_wavenumber, py::arg("mode"),
        py::arg("omega"));
  m.def("box_energy", &waveguide::box_energy, py::arg("mode"), py::arg("k"),
        py::arg("mass"), py::arg("hbar"));
  m.def("mode_wavefunction", &waveguide::mode_wavefunction, py::arg("mode"),
        py::arg("k"));
  m.def("dispersion_point", &waveguide::dispersion_point, py::arg("mode"),
        py::arg("omega"));
  m.def("below_cutoff_attenuation", &waveguide::below_cutoff_attenuation,
        py::arg("mode"), py::arg("omega"), py::arg("length"));

  // --- layered ---

  py::enum_<layered::Polarization>(m, "Polarization")
      .value("S", layered::Polarization::S)
      .value("P", layered::Polarization::P);

  py::class_<layered::Medium>(m, "Medium")
      .def(py::init<double>(), py::arg("n"))
      .def_readonly("n", &layered::Medium::n);

  py::class_<layered::Layer>(m, "Layer")
      .def(py::init<layered::Medium, double>(), py::arg("medium"),
           py::arg("thickness"))
      .def_readonly("medium", &layered::Layer::medium)
      .def_readonly("thickness", &layered::Layer::thickness);

  py::class_<layered::MediumStack>(m, "MediumStack")
      .def(py::init<layered::Medium, std::vector<layered::Layer>, layered::Medium>(),
           py::arg("entry"), py::arg("layers"), py::arg("exit"))
      .def_readonly("entry", &layered::MediumStack::entry)
      .def_readonly("layers", &layered::MediumStack::layers)
      .def_readonly("exit", &layered::MediumStack::exit)
      .def("total_thickness", &layered::MediumStack::total_thickness);

  py::class_<layered::Incidence>(m, "Incidence")
      .def(py::init<double, double, layered::Polarization>(), py::arg("omega"),
           py::arg("theta0"), py::arg("polarization") = layered::Polarization::S)
      .def_readonly("omega", &layered::Incidence::omega)
      .def_readonly("theta0", &layered::Incidence::theta0)
      .def_readonly("polarization", &layered::Incidence::polarization);

  py::class_<layered::InterfaceAmplitudes>(m, "InterfaceAmplitudes")
      .def_readonly("r", &layered::InterfaceAmplitudes::r)
      .def_readonly("t", &layered::InterfaceAmplitudes::t);

  py::class_<layered::ScatteringResult>(m, "ScatteringResult")
      .def_readonly("r", &layered::ScatteringResult::r)
      .def_readonly("t", &layered::ScatteringResult::t)
      .def_readonly("reflectance", &layered::ScatteringResult::reflectance)
      .def_readonly("transmittance", &layered::ScatteringResult::transmittance)
      .def_readonly("phase_t", &layered::ScatteringResult::phase_t);

  py::class_<layered::TirScanRow>(m, "TirScanRow")
      .def_readonly("theta0", &layered::TirScanRow::theta0)
      .def_readonly("theta2", &layered::TirScanRow::theta2)
      .def_readonly("abs_r", &layered::TirScanRow::abs_r)
      .def_readonly("depth", &layered::TirScanRow::depth);

  m.def("transverse_wavenumber", &layered::transverse_wavenumber, py::arg("entry"),
        py::arg("incidence"));
  m.def("kz", &layered::kz, py::arg("medium"), py::arg("omega"), py::arg("k_x"));
  m.def("refraction_angle", &layered::refraction_angle, py::arg("n1"), py::arg("n2"),
        py::arg("theta0"));
  m.def("critical_angle", &layered::critical_angle, py::arg("n1"), py::arg("n2"));
  m.def("interface_amplitudes", &layered::interface_amplitudes, py::arg("n1"),
        py::arg("n2"), py::arg("incidence"));
  m.def("stack_scattering", &layered::stack_scattering, py::arg("stack"),
        py::arg("incidence"));
  m.def("penetration_depth", &layered::penetration_depth, py::arg("n1"),
        py::arg("n2"), py::arg("incidence"));
  m.def("group_delay", &layered::group_delay, py::arg("stack"), py::arg("incidence"),
        py::arg("d_omega") = 0.0);
  m.def("effective_traversal_speed", &layered::effective_traversal_speed,
        py::arg("stack"), py::arg("incidence"), py::arg("d_omega") = 0.0);
  m.def(
      "tir_scan",
      [](double n1, double n2, const std::vector<double>& theta_grid, double omega,
         layered::Polarization polarization) {
        return layered::tir_scan(n1, n2, theta_grid, omega, polarization);
      },
      py::arg("n1"), py::arg("n2"), py::arg("theta_grid"), py::arg("omega"),
      py::arg("polarization") = layered::Polarization::S);

  // --- oracle ---

  py::class_<oracle::CoefficientProfile>(m, "CoefficientProfile")
      .def(py::init([](std::function<double(double)> coefficient, double z_entry,
                       double z_exit, double entry_coefficient,
                       double exit_coefficient, std::vector<double> breakpoints) {
             return oracle::CoefficientProfile{std::move(coefficient),
                                               z_entry,
                                               z_exit,
                                               entry_coefficient,
                                               exit_coefficient,
                                               std::move(breakpoints)};
           }),
           py::arg("coefficient"), py::arg("z_entry"), py::arg("z_exit"),
           py::arg("entry_coefficient"), py::arg("exit_coefficient"),
           py::arg("breakpoints") = std::vector<double>{});

  py::class_<oracle::Profile1D>(m, "Profile1D")
      .def(py::init<Grid1D, std::vector<double>>(), py::arg("grid"),
           py::arg("coefficient"))
      .def_property_readonly("grid", &oracle::Profile1D::grid)
      .def_property_readonly("coefficient", [](const oracle::Profile1D& p) {
        return std::vector<double>(p.coefficient().begin(), p.coefficient().end());
      });

  py::class_<oracle::Amplitudes>(m, "Amplitudes")
      .def_readonly("r", &oracle::Amplitudes::r)
      .def_readonly("t", &oracle::Amplitudes::t);

  py::class_<oracle::IntegrationOptions>(m, "IntegrationOptions")
      .def(py::init<>())
      .def_readwrite("tolerance", &oracle::IntegrationOptions::tolerance)
      .def_readwrite("initial_steps", &oracle::IntegrationOptions::initial_steps)
      .def_readwrite("max_steps", &oracle::IntegrationOptions::max_steps);

  py::class_<oracle::DecayFit>(m, "DecayFit")
      .def_readonly("kappa", &oracle::DecayFit::kappa)
      .def_readonly("kappa_stderr", &oracle::DecayFit::kappa_stderr)
      .def_readonly("intercept", &oracle::DecayFit::intercept);

  py::class_<oracle::SchrodingerWell>(m, "SchrodingerWell")
      .def(py::init([](std::function<double(double)> potential, double z_min,
                       double z_max, double mass, double hbar) {
             return oracle::SchrodingerWell{std::move(potential), z_min, z_max, mass,
                                            hbar};
           }),
           py::arg("potential"), py::arg("z_min"), py::arg("z_max"),
           py::arg("mass") = 0.5, py::arg("hbar") = 1.0);

  m.def("make_profile", &oracle::make_profile, py::arg("sampled"));
  m.def("helmholtz_profile", &oracle::helmholtz_profile, py::arg("stack"),
        py::arg("incidence"));
  m.def(
      "integrate_helmholtz_1d",
      [](const oracle::CoefficientProfile& profile,
         const oracle::IntegrationOptions& options) {
        return oracle::integrate_helmholtz_1d(profile, options);
      },
      py::arg("profile"), py::arg("options") = oracle::IntegrationOptions{});
  m.def(
      "integrate_helmholtz_1d",
      [](const oracle::Profile1D& sampled, const oracle::IntegrationOptions& options) {
        return oracle::integrate_helmholtz_1d(sampled, options);
      },
      py::arg("sampled"), py::arg("options") = oracle::IntegrationOptions{});
  m.def("solve_field", &oracle::solve_field, py::arg("profile"), py::arg("n_points"),
        py::arg("steps_per_cell") = 16);
  m.def(
      "transmission_slope",
      [](const std::function<oracle::CoefficientProfile(double)>& family,
         const std::vector<double>& widths, const oracle::IntegrationOptions& options) {
        return oracle::transmission_slope(family, widths, options);
      },
      py::arg("family"), py::arg("widths"),
      py::arg("options") = oracle::IntegrationOptions{});
  m.def("bound_state_energy", &oracle::bound_state_energy, py::arg("well"),
        py::arg("e_lo"), py::arg("e_hi"), py::arg("tolerance") = 1e-12,
        py::arg("steps") = 8192);

  // --- verify ---

  py::class_<verify::CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &verify::CriterionResult::id)
      .def_readonly("name", &verify::CriterionResult::name)
      .def_readonly("passed", &verify::CriterionResult::passed)
      .def_readonly("detail", &verify::CriterionResult::detail)
      .def_readonly("seconds", &verify::CriterionResult::seconds);

  m.def(
      "run_verification",
      [](bool flip_branch_cut) {
        return verify::run_all({.flip_branch_cut = flip_branch_cut});
      },
      py::arg("flip_branch_cut") = false);

  m.attr("__version__") = "0.1.0";
}
