#pragma once

#include <complex>
#include <optional>

#include "evanwave/errors.hpp"

namespace evanwave::waveguide {

/// Transverse mode of a rectangular guide with perfectly conducting
/// walls: cross-section a x b, mode integers n1, n2 >= 1.  Units are
/// natural (c = 1), so frequencies and wavenumbers share one scale.
struct ModeSpec {
  double a;
  double b;
  int n1;
  int n2;

  ModeSpec(double a, double b, int n1, int n2);
};

/// Cutoff frequency omega_c = pi sqrt(n1^2/a^2 + n2^2/b^2).  Below it the
/// axial wavenumber is imaginary and the mode only decays.
[[nodiscard]] double cutoff_frequency(const ModeSpec& mode);

/// Axial wavenumber k with k^2 = omega^2 - omega_c^2.  Real and
/// non-negative above cutoff, purely imaginary with Im k > 0 below, and
/// exactly zero at cutoff; |k| is continuous through the transition.
[[nodiscard]] std::complex<double> axial_wavenumber(const ModeSpec& mode,
                                                    double omega);

/// Quantum-box analogue: energy of the (n1, n2, k) level of a particle in
/// an a x b guide cross-section,
///
///   E = (pi^2 hbar^2 / 2m) (n1^2/a^2 + n2^2/b^2 + k^2/pi^2).
///
/// A real k below the transverse zero-point energy corresponds to an
/// imaginary axial wavenumber and a decaying (tunnelling) mode.
[[nodiscard]] std::complex<double> box_energy(const ModeSpec& mode,
                                              std::complex<double> k, double mass,
                                              double hbar);

/// Mode profile evaluator,
///
///   psi(x, y, z) = sin(pi n1 x / a) sin(pi n2 y / b) exp(i k z),
///
/// valid for 0 <= x <= a, 0 <= y <= b (throws OutOfBox outside).  An
/// imaginary k turns the axial factor into pure exponential decay.
class ModeWavefunction {
 public:
  ModeWavefunction(const ModeSpec& mode, std::complex<double> k);

  [[nodiscard]] std::complex<double> operator()(double x, double y, double z) const;

 private:
  ModeSpec mode_;
  std::complex<double> k_;
};

[[nodiscard]] ModeWavefunction mode_wavefunction(const ModeSpec& mode,
                                                 std::complex<double> k);

/// One point of the guide dispersion relation.  Phase and group
/// velocities are only defined above cutoff:
///
///   v_p = omega / k = sqrt(k^2 + omega_c^2) / k >= 1
///   v_g = d omega / d k = k / sqrt(k^2 + omega_c^2) <= 1
///
/// and v_p * v_g = 1 identically.  The apparent superluminal v_p carries
/// no signal; v_g stays below the vacuum speed.
struct DispersionPoint {
  double omega;
  double omega_c;
  std::complex<double> k;
  std::optional<double> v_p;
  std::optional<double> v_g;
};

[[nodiscard]] DispersionPoint dispersion_point(const ModeSpec& mode, double omega);

/// Amplitude attenuation factor exp(-|k| L) of a below-cutoff mode over
/// an axial distance L >= 0.  Throws NotEvanescent at or above cutoff.
[[nodiscard]] double below_cutoff_attenuation(const ModeSpec& mode, double omega,
                                              double length);

}  // namespace evanwave::waveguide
