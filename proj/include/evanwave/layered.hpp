#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "evanwave/errors.hpp"

namespace evanwave::layered {

enum class Polarization { S, P };

/// Homogeneous lossless dielectric with real index n > 0 (c = 1).
struct Medium {
  double n;

  explicit Medium(double n);
};

/// Finite slab of a medium with thickness d > 0.
struct Layer {
  Medium medium;
  double thickness;

  Layer(Medium medium, double thickness);
};

/// Entry half-space, finite interior layers, exit half-space.  The entry
/// interface sits at z = 0 and layers stack towards +z.
struct MediumStack {
  Medium entry;
  std::vector<Layer> layers;
  Medium exit;

  MediumStack(Medium entry, std::vector<Layer> layers, Medium exit);

  [[nodiscard]] double total_thickness() const;
};

/// Monochromatic plane wave incident from the entry half-space at polar
/// angle theta0 in [0, pi/2).
struct Incidence {
  double omega;
  double theta0;
  Polarization polarization;

  Incidence(double omega, double theta0, Polarization polarization = Polarization::S);
};

/// Transverse wavenumber k_x = omega n sin(theta0), conserved across all
/// interfaces (Snell's law in invariant form).
[[nodiscard]] double transverse_wavenumber(const Medium& entry, const Incidence& inc);

/// Axial wavenumber in a medium at fixed k_x:
///
///   k_z = sqrt(omega^2 n^2 - k_x^2)
///
/// on the branch Re k_z >= 0, then Im k_z >= 0.  A real k_z propagates; a
/// positive-imaginary k_z decays towards +z (no exponential growth).
[[nodiscard]] std::complex<double> kz(const Medium& medium, double omega, double k_x);

/// Complex refraction angle theta2 with n1 sin(theta0) = n2 sin(theta2).
/// Beyond the critical angle, with s = n1 sin(theta0) / n2 > 1,
///
///   theta2 = pi/2 - i arccosh(s),
///
/// so cos(theta2) = i sinh(arccosh s) is purely imaginary: the refracted
/// wave slides along the interface and decays away from it.  The
/// imaginary part plays the role of an imaginary rotation of the path.
[[nodiscard]] std::complex<double> refraction_angle(double n1, double n2,
                                                    double theta0);

/// Critical angle asin(n2/n1) for n1 >= n2 (pi/2 when n1 == n2); nullopt
/// when the exit side is denser so total reflection cannot occur.
[[nodiscard]] std::optional<double> critical_angle(double n1, double n2);

/// Fresnel amplitudes for a single n1 -> n2 interface in the admittance
/// form r = (q1 - q2)/(q1 + q2), t = 2 q1/(q1 + q2), with q = k_z for S
/// polarization and q = k_z / n^2 for P.  For P the amplitudes refer to
/// the transverse magnetic field, the variable that is continuous across
/// the interface; |r| is convention independent.
struct InterfaceAmplitudes {
  std::complex<double> r;
  std::complex<double> t;
};

[[nodiscard]] InterfaceAmplitudes interface_amplitudes(double n1, double n2,
                                                       const Incidence& inc);

/// Reflection and transmission of the full stack.  r and t are field
/// amplitude ratios referred to the entry (z = 0) and exit (z = D)
/// planes; reflectance = |r|^2 and transmittance = Re(q_exit)/q_entry |t|^2
/// satisfy reflectance + transmittance = 1 for lossless media.  phase_t
/// is the principal-value argument of t.
struct ScatteringResult {
  std::complex<double> r;
  std::complex<double> t;
  double reflectance;
  double transmittance;
  double phase_t;
};

/// Propagate the continuous field pair through every layer with 2x2
/// transfer matrices and match to incident/reflected and transmitted
/// waves in the half-spaces.  Throws DegenerateMatrix if a layer's |k_z|
/// is below 1e-14 omega (the matrix columns decouple numerically).
[[nodiscard]] ScatteringResult stack_scattering(const MediumStack& stack,
                                                const Incidence& inc);

/// 1/e penetration depth of the evanescent tail past a totally
/// reflecting n1 -> n2 interface:
///
///   depth = 1 / (omega sqrt(n1^2 sin^2 theta0 - n2^2)).
///
/// Throws NotEvanescent at or below the critical angle.
[[nodiscard]] double penetration_depth(double n1, double n2, const Incidence& inc);

/// Group delay tau_g = d(arg t)/d(omega) at fixed incidence angle, by
/// Richardson-extrapolated central differences (step d_omega, halved
/// once; pass 0 for the default 1e-6 omega).  For a wide tunnelling gap
/// tau_g saturates with gap width (Hartman effect): the delay is set by
/// the interfaces, not by a traversal at a finite speed, consistent with
/// the barrier segment contributing imaginary rather than real time.
/// Throws PhaseJump if the phase cannot be tracked across the stencil.
[[nodiscard]] double group_delay(const MediumStack& stack, const Incidence& inc,
                                 double d_omega = 0.0);

/// Apparent traversal speed D / tau_g over the total stack thickness D.
/// Values above 1 signal that tau_g is not a propagation time.
[[nodiscard]] double effective_traversal_speed(const MediumStack& stack,
                                               const Incidence& inc,
                                               double d_omega = 0.0);

/// One row of a total-internal-reflection angle scan.
struct TirScanRow {
  double theta0;
  std::complex<double> theta2;
  double abs_r;
  std::optional<double> depth;
};

/// Scan a bare n1 -> n2 interface over incidence angles: refraction
/// angle, |r|, and penetration depth (only defined beyond the critical
/// angle).
[[nodiscard]] std::vector<TirScanRow> tir_scan(double n1, double n2,
                                               std::span<const double> theta_grid,
                                               double omega,
                                               Polarization polarization =
                                                   Polarization::S);

namespace detail {

/// Fresnel amplitudes with an explicit sign on the exit-side k_z.  The
/// public interface uses +1; -1 selects the opposite square-root branch
/// and exists so verification can prove the unitarity check catches a
/// wrong branch convention.  (Flipping only Im k_z conjugates every
/// amplitude of a lossless interface and leaves |r| exactly 1, so the
/// detectable fault is the full branch flip.)
[[nodiscard]] InterfaceAmplitudes interface_amplitudes_with_branch(
    double n1, double n2, const Incidence& inc, double exit_branch_sign);

}  // namespace detail

}  // namespace evanwave::layered
