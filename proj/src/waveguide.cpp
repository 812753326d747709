#include "evanwave/waveguide.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace evanwave::waveguide {

namespace {

using std::numbers::pi;

double transverse_k2(const ModeSpec& mode) {
  const double kx = pi * mode.n1 / mode.a;
  const double ky = pi * mode.n2 / mode.b;
  return kx * kx + ky * ky;
}

}  // namespace

ModeSpec::ModeSpec(double a, double b, int n1, int n2) : a(a), b(b), n1(n1), n2(n2) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("guide cross-section must be positive and finite");
  }
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("mode integers must be >= 1");
  }
}

double cutoff_frequency(const ModeSpec& mode) {
  return std::sqrt(transverse_k2(mode));
}

std::complex<double> axial_wavenumber(const ModeSpec& mode, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("frequency must be non-negative and finite");
  }
  // Factored so k is exactly zero when omega equals cutoff_frequency().
  const double omega_c = cutoff_frequency(mode);
  const double s = (omega - omega_c) * (omega + omega_c);
  if (s >= 0.0) {
    return {std::sqrt(s), 0.0};
  }
  return {0.0, std::sqrt(-s)};
}

std::complex<double> box_energy(const ModeSpec& mode, std::complex<double> k,
                                double mass, double hbar) {
  if (!(mass > 0.0) || !(hbar > 0.0)) {
    throw std::invalid_argument("mass and hbar must be positive");
  }
  const std::complex<double> ksq = k * k;
  return hbar * hbar / (2.0 * mass) * (transverse_k2(mode) + ksq);
}

ModeWavefunction::ModeWavefunction(const ModeSpec& mode, std::complex<double> k)
    : mode_(mode), k_(k) {}

std::complex<double> ModeWavefunction::operator()(double x, double y, double z) const {
  if (x < 0.0 || x > mode_.a || y < 0.0 || y > mode_.b) {
    throw OutOfBox("point lies outside the guide cross-section");
  }
  const double transverse = std::sin(pi * mode_.n1 * x / mode_.a) *
                            std::sin(pi * mode_.n2 * y / mode_.b);
  return transverse * std::exp(std::complex<double>(0.0, 1.0) * k_ * z);
}

ModeWavefunction mode_wavefunction(const ModeSpec& mode, std::complex<double> k) {
  return ModeWavefunction(mode, k);
}

DispersionPoint dispersion_point(const ModeSpec& mode, double omega) {
  const double omega_c = cutoff_frequency(mode);
  const std::complex<double> k = axial_wavenumber(mode, omega);
  DispersionPoint point{omega, omega_c, k, std::nullopt, std::nullopt};
  if (k.real() > 0.0) {
    const double kr = k.real();
    const double root = std::sqrt(kr * kr + omega_c * omega_c);
    point.v_p = root / kr;
    point.v_g = kr / root;
  }
  return point;
}

double below_cutoff_attenuation(const ModeSpec& mode, double omega, double length) {
  if (!(length >= 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("length must be non-negative and finite");
  }
  const std::complex<double> k = axial_wavenumber(mode, omega);
  if (k.imag() <= 0.0) {
    throw NotEvanescent("mode propagates at or above cutoff");
  }
  return std::exp(-k.imag() * length);
}

}  // namespace evanwave::waveguide
