#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"

#include "evanwave/waveguide.hpp"

using namespace evanwave;
using namespace evanwave::waveguide;
using Complex = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("cutoff frequency closed forms") {
  CHECK(cutoff_frequency(ModeSpec(kPi, kPi, 1, 1)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cutoff_frequency(ModeSpec(kPi, kPi, 1, 2)) ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  // Doubling both cross-section sides halves the cutoff.
  const ModeSpec mode(1.3, 0.7, 2, 3);
  const ModeSpec wide(2.6, 1.4, 2, 3);
  CHECK(cutoff_frequency(wide) ==
        doctest::Approx(0.5 * cutoff_frequency(mode)).epsilon(1e-14));
}

TEST_CASE("mode spec validates its arguments") {
  CHECK_THROWS_AS(ModeSpec(0.0, 1.0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ModeSpec(1.0, -2.0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ModeSpec(1.0, 1.0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ModeSpec(1.0, 1.0, 1, -1), std::invalid_argument);
}

TEST_CASE("axial wavenumber branch and threshold") {
  const ModeSpec mode(kPi, kPi, 1, 1);
  const double omega_c = cutoff_frequency(mode);

  const Complex above = axial_wavenumber(mode, std::sqrt(2.0) * omega_c);
  CHECK(above.imag() == 0.0);
  CHECK(above.real() == doctest::Approx(omega_c).epsilon(1e-12));

  const Complex zero = axial_wavenumber(mode, 0.0);
  CHECK(zero.real() == 0.0);
  CHECK(zero.imag() == doctest::Approx(omega_c).epsilon(1e-14));

  // Exactly at the returned cutoff the factored form vanishes bit-exactly.
  const Complex at = axial_wavenumber(mode, omega_c);
  CHECK(at.real() == 0.0);
  CHECK(at.imag() == 0.0);
}

TEST_CASE("axial wavenumber stays on the physical branch") {
  const ModeSpec mode(2.0, 3.0, 2, 1);
  for (double omega = 0.0; omega < 8.0; omega += 0.37) {
    const Complex k = axial_wavenumber(mode, omega);
    CHECK(k.real() >= 0.0);
    CHECK(k.imag() >= 0.0);
    CHECK((k.real() == 0.0 || k.imag() == 0.0));
  }
}

TEST_CASE("box energy closed forms") {
  const ModeSpec mode(kPi, kPi, 1, 1);
  const Complex e0 = box_energy(mode, 0.0, 0.5, 1.0);
  CHECK(e0.real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e0.imag() == 0.0);

  // k = i kappa replaces k^2 by -kappa^2.
  const double kappa = 0.8;
  const Complex tunneling = box_energy(mode, Complex{0.0, kappa}, 0.5, 1.0);
  CHECK(tunneling.real() ==
        doctest::Approx(2.0 - kappa * kappa).epsilon(1e-14));
  CHECK(tunneling.imag() == 0.0);

  // Doubling hbar quadruples the energy.
  const Complex e2 = box_energy(mode, 0.7, 0.5, 2.0);
  const Complex e1 = box_energy(mode, 0.7, 0.5, 1.0);
  CHECK(e2.real() == doctest::Approx(4.0 * e1.real()).epsilon(1e-14));
}

TEST_CASE("box energy tends to the free particle at huge cross-section") {
  const ModeSpec mode(1e6, 1e6, 1, 1);
  const double k = 1.0;
  const Complex e = box_energy(mode, k, 0.5, 1.0);
  CHECK(std::abs(e.real() - 1.0) < 1e-6);
}

TEST_CASE("mode wavefunction walls, antinode, and axial decay") {
  const ModeSpec mode(2.0, 3.0, 1, 1);
  const auto psi = mode_wavefunction(mode, Complex{0.0, 1.0});
  CHECK(std::abs(psi(0.0, 1.0, 0.0)) < 1e-15);
  CHECK(std::abs(psi(2.0, 1.0, 0.0)) < 1e-15);
  CHECK(psi(1.0, 1.5, 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));

  const Complex near = psi(1.0, 1.5, 0.0);
  const Complex far = psi(1.0, 1.5, 1.0);
  CHECK(std::abs(far / near) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

  CHECK_THROWS_AS((void)psi(-0.1, 1.0, 0.0), OutOfBox);
  CHECK_THROWS_AS((void)psi(1.0, 3.5, 0.0), OutOfBox);
}

TEST_CASE("mode wavefunction satisfies the discrete Helmholtz equation") {
  const ModeSpec mode(2.0 * kPi, 2.0 * kPi, 1, 1);
  const Complex k{0.5, 0.0};
  const auto psi = mode_wavefunction(mode, k);
  const double omega_c = cutoff_frequency(mode);
  const double w2 = omega_c * omega_c + (k * k).real();
  const double h = mode.a / 1000.0;  // thousand-point grid spacing

  double worst = 0.0;
  for (double x = 0.3 * mode.a; x <= 0.7 * mode.a; x += 0.1 * mode.a) {
    for (double y = 0.3 * mode.b; y <= 0.7 * mode.b; y += 0.1 * mode.b) {
      for (double z = -1.0; z <= 1.0; z += 0.5) {
        const Complex lap =
            (psi(x + h, y, z) - 2.0 * psi(x, y, z) + psi(x - h, y, z) +
             psi(x, y + h, z) - 2.0 * psi(x, y, z) + psi(x, y - h, z) +
             psi(x, y, z + h) - 2.0 * psi(x, y, z) + psi(x, y, z - h)) /
            (h * h);
        worst = std::max(worst, std::abs(lap + w2 * psi(x, y, z)));
      }
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("dispersion point reproduces the closed-form velocities") {
  const ModeSpec mode(kPi, kPi, 1, 1);
  const double omega_c = cutoff_frequency(mode);

  const auto point = dispersion_point(mode, std::sqrt(2.0) * omega_c);
  REQUIRE(point.v_p.has_value());
  REQUIRE(point.v_g.has_value());
  CHECK(*point.v_p == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(*point.v_g == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK((*point.v_p) * (*point.v_g) == doctest::Approx(1.0).epsilon(1e-14));

  // Just above threshold the group velocity collapses.
  const auto slow = dispersion_point(mode, omega_c * (1.0 + 1e-8));
  REQUIRE(slow.v_g.has_value());
  CHECK(*slow.v_g < 2e-4);

  // Far above threshold both velocities approach the vacuum speed.
  const auto fast = dispersion_point(mode, 1e6 * omega_c);
  CHECK(*fast.v_p == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(*fast.v_g == doctest::Approx(1.0).epsilon(1e-10));

  // At and below cutoff the velocities are absent.
  CHECK_FALSE(dispersion_point(mode, omega_c).v_p.has_value());
  CHECK_FALSE(dispersion_point(mode, 0.5 * omega_c).v_g.has_value());
}

TEST_CASE("below-cutoff attenuation closed forms") {
  const ModeSpec mode(kPi, kPi, 1, 1);
  const double omega_c = cutoff_frequency(mode);

  CHECK(below_cutoff_attenuation(mode, 0.5 * omega_c, 0.0) == 1.0);
  CHECK(below_cutoff_attenuation(mode, 0.0, 1.0 / omega_c) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

  const double a1 = below_cutoff_attenuation(mode, 0.9, 0.7);
  const double a2 = below_cutoff_attenuation(mode, 0.9, 1.1);
  const double joint = below_cutoff_attenuation(mode, 0.9, 1.8);
  CHECK(joint == doctest::Approx(a1 * a2).epsilon(1e-12));

  CHECK_THROWS_AS((void)below_cutoff_attenuation(mode, omega_c, 1.0), NotEvanescent);
  CHECK_THROWS_AS((void)below_cutoff_attenuation(mode, 2.0 * omega_c, 1.0),
                  NotEvanescent);
}
