#include "evanwave/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "evanwave/grid.hpp"
#include "evanwave/layered.hpp"
#include "evanwave/oracle.hpp"
#include "evanwave/waveguide.hpp"
#include "evanwave/wkb.hpp"

namespace evanwave::verify {

namespace {

using std::numbers::pi;
using Complex = std::complex<double>;

struct Check {
  bool passed;
  std::string detail;
};

std::string scientific(double value) {
  std::ostringstream out;
  out.precision(2);
  out << std::scientific << value;
  return out.str();
}

// Deterministic uniform [0, 1) independent of the standard library's
// distribution implementation.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::lerp(lo, hi, uniform01(rng));
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    values[i] = std::exp(std::lerp(std::log(lo), std::log(hi), f));
  }
  return values;
}

// --- 1: phase and group velocity satisfy v_p v_g = 1 above cutoff ---

Check dispersion_identity() {
  const double a = 1.3;
  const double b = 0.9;
  double worst = 0.0;
  bool bounds_ok = true;
  for (int n1 = 1; n1 <= 5; ++n1) {
    for (int n2 = 1; n2 <= 5; ++n2) {
      const waveguide::ModeSpec mode{a, b, n1, n2};
      const double omega_c = waveguide::cutoff_frequency(mode);
      for (double factor : log_spaced(1.0 + 1e-6, 100.0, 400)) {
        const auto point = waveguide::dispersion_point(mode, omega_c * factor);
        if (!point.v_p || !point.v_g) {
          return {false, "velocities undefined above cutoff"};
        }
        worst = std::max(worst, std::abs(*point.v_p * *point.v_g - 1.0));
        bounds_ok = bounds_ok && *point.v_p >= 1.0 && *point.v_g <= 1.0;
      }
    }
  }
  return {worst <= 1e-12 && bounds_ok,
          "25 modes x 400 freqs, max|v_p*v_g-1|=" + scientific(worst)};
}

// --- 2: axial wavenumber switches real <-> imaginary exactly at cutoff ---

Check cutoff_threshold() {
  const waveguide::ModeSpec mode{pi, pi, 1, 1};
  const double omega_c = waveguide::cutoff_frequency(mode);
  bool split_ok = true;
  for (int i = 0; i <= 1000; ++i) {
    const double f = static_cast<double>(i) / 500.0;
    const auto k = waveguide::axial_wavenumber(mode, omega_c * f);
    if (f < 1.0) {
      split_ok = split_ok && k.real() == 0.0 && k.imag() > 0.0;
    } else if (f > 1.0) {
      split_ok = split_ok && k.imag() == 0.0 && k.real() > 0.0;
    }
  }
  const double at_cutoff = std::abs(waveguide::axial_wavenumber(mode, omega_c));
  // |k| ~ omega_c sqrt(2 df) just off cutoff: continuity bound at df = 0.002.
  const double near = std::max(
      std::abs(waveguide::axial_wavenumber(mode, omega_c * (1.0 - 0.002))),
      std::abs(waveguide::axial_wavenumber(mode, omega_c * (1.0 + 0.002))));
  const bool continuous = near <= omega_c * std::sqrt(2.0 * 0.002) * 1.01;
  return {split_ok && at_cutoff <= 1e-10 * omega_c && continuous,
          "|k(omega_c)|=" + scientific(at_cutoff) +
              ", near-cutoff |k|=" + scientific(near)};
}

// --- 3: interface scattering is unitary for lossless media ---

Check tir_unitarity(const Options& options) {
  const double n1 = 1.5;
  const double n2 = 1.0;
  const double theta_c = *layered::critical_angle(n1, n2);
  const double branch = options.flip_branch_cut ? -1.0 : 1.0;
  double worst_flux = 0.0;   // below critical: |R + T - 1|
  double worst_total = 0.0;  // above critical: ||r| - 1|
  for (auto pol : {layered::Polarization::S, layered::Polarization::P}) {
    for (double omega : log_spaced(0.1, 100.0, 20)) {
      for (int j = 0; j < 25; ++j) {
        const double f = (j + 0.5) / 25.0;
        // Below the critical angle: energy flux splits between r and t.
        {
          const layered::Incidence inc{omega, f * (theta_c - 1e-6), pol};
          const auto amps =
              layered::detail::interface_amplitudes_with_branch(n1, n2, inc, branch);
          const double q1 = inc.omega * n1 * std::cos(inc.theta0) *
                            (pol == layered::Polarization::S ? 1.0 : 1.0 / (n1 * n1));
          const Complex k2z =
              branch * layered::kz(layered::Medium{n2}, inc.omega,
                                   layered::transverse_wavenumber(
                                       layered::Medium{n1}, inc));
          const double q2 =
              (k2z * (pol == layered::Polarization::S ? 1.0 : 1.0 / (n2 * n2)))
                  .real();
          const double flux = std::norm(amps.r) + q2 / q1 * std::norm(amps.t);
          worst_flux = std::max(worst_flux, std::abs(flux - 1.0));
        }
        // Beyond it: total reflection, |r| = 1 to machine accuracy.
        {
          const layered::Incidence inc{
              omega, theta_c + 1e-6 + f * (pi / 2.0 - theta_c - 2e-6), pol};
          const auto amps =
              layered::detail::interface_amplitudes_with_branch(n1, n2, inc, branch);
          worst_total = std::max(worst_total, std::abs(std::abs(amps.r) - 1.0));
        }
      }
    }
  }
  const double worst = std::max(worst_flux, worst_total);
  return {worst <= 1e-12, "S+P, 2000 samples, max|R+T-1|=" + scientific(worst_flux) +
                              ", max||r|-1|=" + scientific(worst_total)};
}

// --- 4: critical angle against an independent bisection ---

Check critical_angle_value() {
  const double reference = 0.7297276562269663;
  const double direct = *layered::critical_angle(1.5, 1.0);
  // Independent route: bisect 1.5 sin(theta) - 1 without calling asin.
  double lo = 0.0;
  double hi = pi / 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (1.5 * std::sin(mid) - 1.0 < 0.0 ? lo : hi) = mid;
  }
  const double bisected = 0.5 * (lo + hi);
  const double err_direct = std::abs(direct - reference);
  const double err_cross = std::abs(bisected - direct);
  return {err_direct <= 1e-12 && err_cross <= 1e-12,
          "|theta_c-ref|=" + scientific(err_direct) +
              ", |bisect-direct|=" + scientific(err_cross)};
}

// --- 5: transfer matrices against the brute-force integrator ---

Check oracle_vs_matrix() {
  std::mt19937_64 rng(20260814u);
  const double omega = 2.0 * pi;
  oracle::IntegrationOptions opts;
  opts.tolerance = 1e-9;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto n_layers = static_cast<std::size_t>(1 + rng() % 5);
    std::vector<layered::Layer> layers;
    for (std::size_t i = 0; i < n_layers; ++i) {
      layers.emplace_back(layered::Medium{uniform(rng, 1.0, 2.5)},
                          uniform(rng, 0.05, 3.0));
    }
    const layered::MediumStack stack{layered::Medium{uniform(rng, 1.0, 2.5)},
                                     std::move(layers),
                                     layered::Medium{uniform(rng, 1.0, 2.5)}};
    const layered::Incidence inc{omega, uniform(rng, 0.0, 0.95 * pi / 2.0),
                                 layered::Polarization::S};
    const auto matrix = layered::stack_scattering(stack, inc);
    const auto brute = oracle::integrate_helmholtz_1d(
        oracle::helmholtz_profile(stack, inc), opts);
    const double err_r =
        std::abs(matrix.r - brute.r) / std::max(std::abs(matrix.r), 1e-2);
    const double err_t =
        std::abs(matrix.t - brute.t) / std::max(std::abs(matrix.t), 1e-300);
    worst = std::max(worst, std::max(err_r, err_t));
  }
  return {worst <= 1e-6, "20 random stacks, worst rel err=" + scientific(worst)};
}

// --- 6: fitted decay rates against the analytic attenuation ---

Check evanescent_decay_rate() {
  struct Case {
    std::function<oracle::CoefficientProfile(double)> family;
    double kappa;
  };
  std::vector<Case> cases;

  // Uniform barrier: c = -1 inside, free k^2 = 2 outside.
  cases.push_back(Case{[](double width) {
                         return oracle::CoefficientProfile{
                             [](double) { return -1.0; }, 0.0, width, 2.0, 2.0, {}};
                       },
                       1.0});

  // Two frustrated-total-reflection gaps, kappa = omega sqrt(n1^2
  // sin^2(theta0) - n2^2).
  const auto ftir_case = [](double n1, double n2, double theta_extra, double omega) {
    const double theta0 = std::asin(n2 / n1) + theta_extra;
    const double s = n1 * std::sin(theta0);
    const double kappa = omega * std::sqrt(s * s - n2 * n2);
    auto family = [n1, n2, theta0, omega](double width) {
      const layered::MediumStack stack{layered::Medium{n1},
                                       {layered::Layer{layered::Medium{n2}, width}},
                                       layered::Medium{n1}};
      return oracle::helmholtz_profile(
          stack, layered::Incidence{omega, theta0, layered::Polarization::S});
    };
    return Case{std::move(family), kappa};
  };
  cases.push_back(ftir_case(1.5, 1.0, 0.2, 2.0 * pi));
  cases.push_back(ftir_case(2.0, 1.3, 0.35, 1.7));

  double worst = 0.0;
  for (const auto& item : cases) {
    // Widths with kappa L in [6, 12]: deep decay, negligible curvature.
    std::vector<double> widths;
    for (double s : {6.0, 8.0, 10.0, 12.0}) {
      widths.push_back(s / item.kappa);
    }
    const auto fit = oracle::transmission_slope(item.family, widths);
    worst = std::max(worst, std::abs(fit.kappa - item.kappa) / item.kappa);
  }
  return {worst <= 1e-4, "3 geometries, worst rel err=" + scientific(worst)};
}

// --- 7: group delay saturates with gap width (Hartman effect) ---

Check hartman_saturation() {
  const double n_glass = 1.5;
  const double omega = 2.0 * pi;  // vacuum wavelength 1
  const double theta0 = std::asin(1.0 / n_glass) + 0.1;
  const layered::Incidence inc{omega, theta0, layered::Polarization::S};
  std::vector<double> tau;
  for (int k = 2; k <= 10; ++k) {
    const layered::MediumStack stack{
        layered::Medium{n_glass},
        {layered::Layer{layered::Medium{1.0}, static_cast<double>(k)}},
        layered::Medium{n_glass}};
    tau.push_back(layered::group_delay(stack, inc));
  }
  const double tau5 = tau[3];
  const double tau10 = tau[8];
  const double rel_change = std::abs(tau10 - tau5) / tau5;
  const bool growing = tau[1] > tau[0];  // still rising while kappa d is small
  const layered::MediumStack wide{
      layered::Medium{n_glass},
      {layered::Layer{layered::Medium{1.0}, 10.0}},
      layered::Medium{n_glass}};
  const double v_eff = layered::effective_traversal_speed(wide, inc);
  // Signal-carrying group velocities in the actual media stay at or
  // below the vacuum speed; the apparent barrier speed does not.
  const bool media_subluminal = 1.0 / n_glass <= 1.0 && 1.0 / 1.0 <= 1.0;
  return {rel_change < 0.01 && v_eff > 1.0 && growing && media_subluminal,
          "tau(5)=" + scientific(tau5) + ", tau(10)=" + scientific(tau10) +
              ", rel change=" + scientific(rel_change) +
              ", v_eff(10 lambda)=" + scientific(v_eff)};
}

// --- 8: residuals of exact solutions vanish at second order ---

struct ExactSolution {
  std::function<Complex(double)> prefactor;
  std::function<double(double)> s_real;
  std::function<double(double)> s_imag;
  std::function<double(double)> potential_quantum;    // exact for the hbar pair
  std::function<double(double)> potential_classical;  // exact for the classical pair
  bool measure_classical;
};

Check residual_convergence() {
  constexpr double hbar = 1.0;
  std::vector<ExactSolution> solutions;

  // Oscillatory prefactor, flat phases: psi = cos(3x + 0.4).
  solutions.push_back(ExactSolution{
      [](double x) { return Complex{std::cos(3.0 * x + 0.4), 0.0}; },
      [](double) { return 0.0; },
      [](double) { return 0.0; },
      [](double) { return -4.5; },
      {},
      false});

  // Euclidean branch: S_r = cosh x, unit prefactor.
  solutions.push_back(ExactSolution{
      [](double) { return Complex{1.0, 0.0}; },
      [](double x) { return std::cosh(x); },
      [](double) { return 0.0; },
      [](double x) {
        return 0.5 * std::sinh(x) * std::sinh(x) - 0.5 * hbar * std::cosh(x);
      },
      [](double x) { return 0.5 * std::sinh(x) * std::sinh(x); },
      true});

  // Travelling WKB pair: S_i = x + 0.3 sin x, C = (S_i')^{-1/2}.
  const auto sip = [](double x) { return 1.0 + 0.3 * std::cos(x); };
  const auto sipp = [](double x) { return -0.3 * std::sin(x); };
  const auto sippp = [](double x) { return -0.3 * std::cos(x); };
  const auto cfun = [sip](double x) { return std::pow(sip(x), -0.5); };
  const auto cpp = [sip, sipp, sippp](double x) {
    return -0.5 * sippp(x) * std::pow(sip(x), -1.5) +
           0.75 * sipp(x) * sipp(x) * std::pow(sip(x), -2.5);
  };
  solutions.push_back(ExactSolution{
      [cfun](double x) { return Complex{cfun(x), 0.0}; },
      [](double) { return 0.0; },
      [sip](double x) { return x + 0.3 * std::sin(x); },
      [sip, cpp, cfun](double x) {
        return -0.5 * sip(x) * sip(x) + 0.5 * hbar * hbar * cpp(x) / cfun(x);
      },
      [sip](double x) { return -0.5 * sip(x) * sip(x); },
      true});

  const std::vector<std::size_t> sizes{129, 257, 513, 1025, 2049, 4097};
  double worst_order_low = 2.0;
  double worst_order_high = 2.0;
  double worst_floor = 0.0;

  for (const auto& solution : solutions) {
    std::vector<double> max_q_real(sizes.size());
    std::vector<double> max_q_imag(sizes.size());
    std::vector<double> max_c_real(sizes.size());
    std::vector<double> max_c_imag(sizes.size());
    for (std::size_t level = 0; level < sizes.size(); ++level) {
      const Grid1D grid(-1.5, 1.5, sizes[level]);
      const std::size_t n = grid.size();
      std::vector<Complex> c(n);
      std::vector<double> sr(n);
      std::vector<double> si(n);
      std::vector<double> vq(n);
      std::vector<double> vc(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x(i);
        c[i] = solution.prefactor(x);
        sr[i] = solution.s_real(x);
        si[i] = solution.s_imag(x);
        vq[i] = solution.potential_quantum(x);
        vc[i] = solution.measure_classical ? solution.potential_classical(x) : 0.0;
      }
      const ComplexField1D cf(grid, c);
      const RealField1D srf(grid, sr);
      const RealField1D sif(grid, si);
      const auto quantum =
          wkb::hj_residual_quantum(cf, srf, sif, PotentialProfile(grid, vq), hbar);
      for (std::size_t i = 0; i < n; ++i) {
        max_q_real[level] =
            std::max(max_q_real[level], std::abs(quantum.real_equation[i]));
        max_q_imag[level] =
            std::max(max_q_imag[level], std::abs(quantum.imag_equation[i]));
      }
      if (solution.measure_classical) {
        const auto classical =
            wkb::hj_residual_classical(srf, sif, PotentialProfile(grid, vc));
        for (std::size_t i = 0; i < n; ++i) {
          max_c_real[level] =
              std::max(max_c_real[level], std::abs(classical.real_equation[i]));
          max_c_imag[level] =
              std::max(max_c_imag[level], std::abs(classical.imag_equation[i]));
        }
      }
    }

    // Least-squares slope of log2(residual) vs refinement level; a
    // series at the rounding floor instead passes the floor check.
    const auto order_of = [&](const std::vector<double>& series) {
      double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
      const auto m = static_cast<double>(series.size());
      for (std::size_t i = 0; i < series.size(); ++i) {
        const double x = static_cast<double>(i);
        const double y = std::log2(series[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      return -(m * sxy - sx * sy) / (m * sxx - sx * sx);
    };
    const auto track = [&](const std::vector<double>& series, bool expect_signal) {
      const double last = series.back();
      if (!expect_signal || last < 1e-14) {
        worst_floor = std::max(worst_floor, last);
        return;
      }
      const double order = order_of(series);
      worst_order_low = std::min(worst_order_low, order);
      worst_order_high = std::max(worst_order_high, order);
    };
    track(max_q_real, true);
    track(max_q_imag, solution.measure_classical && solution.s_imag(0.3) != 0.0);
    if (solution.measure_classical) {
      track(max_c_real, true);
      track(max_c_imag, false);
    }
  }

  const bool orders_ok = worst_order_low >= 1.7 && worst_order_high <= 2.3;
  const bool floor_ok = worst_floor <= 1e-14;
  return {orders_ok && floor_ok,
          "orders in [" + scientific(worst_order_low) + ", " +
              scientific(worst_order_high) +
              "], structural-zero residual max=" + scientific(worst_floor)};
}

// --- 9: box spectrum from the shooting oracle ---

Check box_spectrum() {
  const oracle::SchrodingerWell well{[](double) { return 0.0; }, 0.0, pi, 0.5, 1.0};
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const double expected = static_cast<double>(n) * static_cast<double>(n);
    const double energy =
        oracle::bound_state_energy(well, expected - 0.5, expected + 0.5);
    worst = std::max(worst, std::abs(energy - expected));
  }
  // Same ladder through the box-energy formula: a = b = pi, m = 1/2,
  // hbar = 1 gives E = 2 + k^2.
  const waveguide::ModeSpec mode{pi, pi, 1, 1};
  const double box = waveguide::box_energy(mode, {1.0, 0.0}, 0.5, 1.0).real();
  const bool box_ok = std::abs(box - 3.0) <= 1e-12;
  return {worst <= 1e-10 && box_ok,
          "n=1..3, max|E-n^2|=" + scientific(worst) +
              ", box E(k=1)=" + scientific(box)};
}

// --- 10: brute-force tunnelling amplitude against the WKB damping ---

Check wkb_damping_factor() {
  const double k = std::sqrt(2.0);
  const double width = 2.0;
  double worst_low = 1.0;
  double worst_high = 1.0;
  for (double kappa : {std::sqrt(2.0), 2.0}) {
    const oracle::CoefficientProfile barrier{
        [kappa](double) { return -kappa * kappa; }, 0.0, width, k * k, k * k, {}};
    const double t_abs = std::abs(oracle::integrate_helmholtz_1d(barrier).t);

    // WKB side: unit-mass zero-energy potential V = kappa^2 / 2 under
    // the barrier, so sqrt(2V) matches the decay rate.
    const Grid1D grid(0.0, width, 201);
    const PotentialProfile potential(
        grid, std::vector<double>(grid.size(), 0.5 * kappa * kappa));
    const auto action = wkb::wkb_action(potential, 0, grid.size() - 1);
    const double damping = std::exp(-action.euclidean);
    const double ratio = t_abs / damping;
    worst_low = std::min(worst_low, ratio);
    worst_high = std::max(worst_high, ratio);

    // The same barrier's imaginary-time lapse matches L / kappa.
    const double tau = wkb::imaginary_time_lapse(potential, 0, grid.size() - 1, 1e-6);
    if (std::abs(tau - width / kappa) > 1e-6 * width / kappa) {
      return {false, "imaginary-time lapse off: " + scientific(tau)};
    }
  }
  const bool ok = worst_low >= 1.0 / 3.0 && worst_high <= 3.0;
  return {ok, "|t|/exp(-S_e) in [" + scientific(worst_low) + ", " +
                  scientific(worst_high) + "]"};
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& options) {
  struct Entry {
    int id;
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Entry> entries{
      {1, "dispersion-identity", [] { return dispersion_identity(); }},
      {2, "cutoff-threshold", [] { return cutoff_threshold(); }},
      {3, "tir-unitarity", [&options] { return tir_unitarity(options); }},
      {4, "critical-angle-value", [] { return critical_angle_value(); }},
      {5, "oracle-vs-matrix", [] { return oracle_vs_matrix(); }},
      {6, "evanescent-decay-rate", [] { return evanescent_decay_rate(); }},
      {7, "hartman-saturation", [] { return hartman_saturation(); }},
      {8, "residual-convergence", [] { return residual_convergence(); }},
      {9, "box-spectrum", [] { return box_spectrum(); }},
      {10, "wkb-damping-factor", [] { return wkb_damping_factor(); }},
  };
  std::vector<CriterionResult> results;
  results.reserve(entries.size());
  for (const auto& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    Check check{false, "unhandled exception"};
    try {
      check = entry.run();
    } catch (const std::exception& e) {
      check = {false, std::string("exception: ") + e.what()};
    }
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    results.push_back(
        CriterionResult{entry.id, entry.name, check.passed, check.detail, seconds});
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

void print_report(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& result : results) {
    out << (result.passed ? "PASS" : "FAIL") << "  " << result.id << "/"
        << results.size() << "  " << result.name << "  ("
        << static_cast<int>(result.seconds * 1000.0) << " ms)  " << result.detail
        << "\n";
  }
}

}  // namespace evanwave::verify
