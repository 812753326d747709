#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "evanwave/errors.hpp"
#include "evanwave/layered.hpp"
#include "evanwave/oracle.hpp"
#include "evanwave/waveguide.hpp"

using namespace evanwave;
using namespace evanwave::oracle;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

CoefficientProfile uniform_barrier(double width) {
  return CoefficientProfile{[](double) { return -1.0; }, 0.0, width, 1.0, 1.0, {}};
}

}  // namespace

TEST_CASE("a uniform medium does not scatter") {
  const CoefficientProfile profile{[](double) { return 4.0; }, 0.0, 3.0,
                                   4.0, 4.0, {}};
  const Amplitudes amps = integrate_helmholtz_1d(profile);
  CHECK(std::abs(amps.r) < 1e-8);
  CHECK(std::abs(std::abs(amps.t) - 1.0) < 1e-8);
}

TEST_CASE("a zero-span profile reduces to the exact Fresnel split") {
  const CoefficientProfile profile{[](double) { return 1.0; }, 0.0, 0.0,
                                   1.0, 4.0, {}};
  const Amplitudes amps = integrate_helmholtz_1d(profile);
  CHECK(std::abs(amps.r - Complex{-1.0 / 3.0, 0.0}) < 1e-15);
  CHECK(std::abs(amps.t - Complex{2.0 / 3.0, 0.0}) < 1e-15);
}

TEST_CASE("brute-force integration reproduces the transfer matrix under FTIR") {
  const layered::MediumStack stack{layered::Medium{1.5},
                                   {layered::Layer{layered::Medium{1.0}, 1.0}},
                                   layered::Medium{1.5}};
  const layered::Incidence inc{2.0 * kPi, 0.8};
  const auto matrix = layered::stack_scattering(stack, inc);
  const Amplitudes ode = integrate_helmholtz_1d(helmholtz_profile(stack, inc));
  CHECK(std::abs(ode.r - matrix.r) < 1e-6);
  CHECK(std::abs(ode.t - matrix.t) < 1e-6);
}

TEST_CASE("flux is conserved across a smooth compactly supported bump") {
  const Grid1D grid(0.0, 10.0, 401);
  std::vector<double> c(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = (grid.x(i) - 5.0) / 2.0;
    c[i] = std::abs(u) < 1.0 ? 4.0 - 3.0 * std::exp(-1.0 / (1.0 - u * u)) : 4.0;
  }
  const Profile1D sampled(grid, c);
  const Amplitudes amps = integrate_helmholtz_1d(sampled);
  // k_in == k_out, so |r|^2 + |t|^2 is the full flux budget.
  const double flux = std::norm(amps.r) + std::norm(amps.t);
  CHECK(flux == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(amps.r) > 1e-6);  // the bump scatters measurably
}

TEST_CASE("profile validation rejects broken inputs") {
  CHECK_THROWS_AS(
      (void)integrate_helmholtz_1d(CoefficientProfile{
          [](double) { return 1.0; }, 0.0, 1.0, -1.0, 1.0, {}}),
      EvanescentEntry);
  CHECK_THROWS_AS(
      (void)integrate_helmholtz_1d(CoefficientProfile{
          nullptr, 0.0, 1.0, 1.0, 1.0, {}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)integrate_helmholtz_1d(CoefficientProfile{
          [](double) { return 1.0; }, 2.0, 1.0, 1.0, 1.0, {}}),
      std::invalid_argument);

  // Sampled profiles must end in constant asymptotic media.
  const Grid1D grid(0.0, 1.0, 41);
  std::vector<double> ramp(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ramp[i] = 1.0 + grid.x(i);
  }
  CHECK_THROWS_AS(Profile1D(grid, ramp), std::invalid_argument);
}

TEST_CASE("step halving gives up within the step budget") {
  const CoefficientProfile profile{[](double z) { return 2.0 + std::cos(z); },
                                   0.0, 2.0 * kPi, 3.0, 3.0, {}};
  IntegrationOptions options;
  options.tolerance = 1e-16;
  options.initial_steps = 512;
  options.max_steps = 1024;
  CHECK_THROWS_AS((void)integrate_helmholtz_1d(profile, options), NoConvergence);
}

TEST_CASE("the marched field converges at fourth order") {
  const CoefficientProfile profile{[](double z) { return 2.0 + std::cos(z); },
                                   0.0, 2.0 * kPi, 3.0, 3.0, {}};
  const Complex reference = solve_field(profile, 3, 4096).values()[0];
  double err[3];
  std::size_t steps = 64;
  for (int i = 0; i < 3; ++i) {
    err[i] = std::abs(solve_field(profile, 3, steps).values()[0] - reference);
    steps *= 2;
  }
  CHECK(err[0] / err[1] > 14.0);
  CHECK(err[0] / err[1] < 18.0);
  CHECK(err[1] / err[2] > 14.0);
  CHECK(err[1] / err[2] < 18.0);
}

TEST_CASE("fitted decay rate recovers the barrier's imaginary wavenumber") {
  const std::vector<double> widths{6.0, 8.0, 10.0, 12.0};
  const DecayFit fit = transmission_slope(uniform_barrier, widths);
  CHECK(fit.kappa == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(fit.kappa_stderr < 1e-4);
}

TEST_CASE("resonant propagating slabs fit a vanishing decay rate") {
  const auto family = [](double width) {
    return CoefficientProfile{[](double) { return 1.0; }, 0.0, width, 4.0, 4.0, {}};
  };
  const std::vector<double> widths{2.0 * kPi, 3.0 * kPi, 4.0 * kPi, 5.0 * kPi};
  const DecayFit fit = transmission_slope(family, widths);
  CHECK(std::abs(fit.kappa) < 1e-6);
}

TEST_CASE("tunnelling decay matches the waveguide attenuation constant") {
  // A mode 1/sqrt(2) below cutoff decays like a c = -1 barrier transmits.
  const waveguide::ModeSpec mode(kPi, kPi, 1, 1);
  const double kappa_guide =
      std::abs(waveguide::axial_wavenumber(mode, 1.0).imag());
  const std::vector<double> widths{6.0, 8.0, 10.0, 12.0};
  const DecayFit fit = transmission_slope(uniform_barrier, widths);
  CHECK(fit.kappa == doctest::Approx(kappa_guide).epsilon(1e-4));
}

TEST_CASE("bound states of a hard-wall well land on the exact spectrum") {
  const SchrodingerWell well{[](double) { return 0.0; }, 0.0, kPi};
  CHECK(bound_state_energy(well, 0.5, 1.5) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(bound_state_energy(well, 3.5, 4.5) == doctest::Approx(4.0).epsilon(1e-8));

  const SchrodingerWell wide{[](double) { return 0.0; }, 0.0, 2.0 * kPi};
  CHECK(bound_state_energy(wide, 0.1, 0.4) == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("bound-state brackets are certified by node counts") {
  const SchrodingerWell well{[](double) { return 0.0; }, 0.0, kPi};
  CHECK_THROWS_AS((void)bound_state_energy(well, 1.5, 3.5), BracketEmpty);
  CHECK_THROWS_AS((void)bound_state_energy(well, 0.5, 4.5), BracketAmbiguous);
  CHECK_THROWS_AS((void)bound_state_energy(well, 1.5, 0.5), std::invalid_argument);
}
