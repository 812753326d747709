#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "evanwave/grid.hpp"
#include "evanwave/layered.hpp"

namespace evanwave::oracle {

/// Scattering coefficient c(z) for the one-dimensional Helmholtz form
///
///   psi''(z) + c(z) psi(z) = 0,
///
/// with c constant outside [z_entry, z_exit].  c > 0 oscillates with
/// local wavenumber sqrt(c); c < 0 decays with rate sqrt(-c).  The same
/// form covers a plane wave across dielectric layers at fixed k_x
/// (c = omega^2 n^2 - k_x^2) and a fixed-energy Schroedinger particle
/// (c = 2m (E - U) / hbar^2), which is why one integrator can
/// cross-check both pictures.
///
/// breakpoints lists interior discontinuities of c; integration steps
/// never straddle them, and coefficient evaluations at a breakpoint
/// resolve to the segment being integrated.
struct CoefficientProfile {
  std::function<double(double)> coefficient;
  double z_entry;
  double z_exit;
  double entry_coefficient;
  double exit_coefficient;
  std::vector<double> breakpoints;
};

/// Sampled coefficient on a uniform grid.  The first and last 5% of the
/// samples (at least two points each) must be constant: they stand for
/// the asymptotic media where incident, reflected, and transmitted waves
/// are read off.
class Profile1D {
 public:
  Profile1D(Grid1D grid, std::vector<double> coefficient);

  [[nodiscard]] const Grid1D& grid() const { return grid_; }
  [[nodiscard]] std::span<const double> coefficient() const { return c_; }

 private:
  Grid1D grid_;
  std::vector<double> c_;
};

/// Piecewise-linear interpolant of a sampled profile, matched at the
/// grid ends.
[[nodiscard]] CoefficientProfile make_profile(const Profile1D& sampled);

/// Exact piecewise-constant coefficient of a dielectric stack at the
/// given incidence, with matching planes on the first and last
/// interfaces (the same reference planes the transfer matrices use).
/// The reduction is for S polarization, where the field and its
/// derivative are both continuous.
[[nodiscard]] CoefficientProfile helmholtz_profile(const layered::MediumStack& stack,
                                                   const layered::Incidence& inc);

struct Amplitudes {
  std::complex<double> r;
  std::complex<double> t;
};

struct IntegrationOptions {
  /// Step halving stops when r and t move by less than this.
  double tolerance = 1e-8;
  std::size_t initial_steps = 512;
  std::size_t max_steps = std::size_t{1} << 20;
};

/// Reflection and transmission amplitudes by brute-force integration:
/// classical RK4 marched backwards from a pure transmitted wave at
/// z_exit to z_entry, where the field is split into incident and
/// reflected parts.  Backward marching keeps the transmitted solution
/// dominant under barriers, so deep tunnelling amplitudes stay accurate.
/// The step count doubles until r and t settle within
/// options.tolerance; throws NoConvergence past options.max_steps and
/// EvanescentEntry if the entry side cannot carry travelling waves.
[[nodiscard]] Amplitudes integrate_helmholtz_1d(const CoefficientProfile& profile,
                                                const IntegrationOptions& options = {});
[[nodiscard]] Amplitudes integrate_helmholtz_1d(const Profile1D& sampled,
                                                const IntegrationOptions& options = {});

/// Full complex field of the backward-marched trial solution, sampled
/// at n_points uniform nodes across [z_entry, z_exit] and normalised to
/// a unit transmitted amplitude at z_exit.  steps_per_cell RK4 substeps
/// separate consecutive nodes.
[[nodiscard]] ComplexField1D solve_field(const CoefficientProfile& profile,
                                         std::size_t n_points,
                                         std::size_t steps_per_cell = 16);

/// Least-squares fit of ln|t| against barrier width.
struct DecayFit {
  double kappa;        // decay rate: ln|t| ~ intercept - kappa * width
  double kappa_stderr; // standard error of the slope
  double intercept;
};

/// Measure an evanescent decay rate from transmission amplitudes of the
/// profiles family(width) over at least four widths.  For a uniform
/// barrier the fitted kappa approaches sqrt(-c) inside the barrier,
/// tying the decay constant to the imaginary axial wavenumber.
[[nodiscard]] DecayFit transmission_slope(
    const std::function<CoefficientProfile(double)>& family,
    std::span<const double> widths, const IntegrationOptions& options = {});

/// Confining well in Schroedinger form, with hard walls at z_min, z_max.
struct SchrodingerWell {
  std::function<double(double)> potential;
  double z_min;
  double z_max;
  double mass = 0.5;
  double hbar = 1.0;
};

/// One bound-state energy inside (e_lo, e_hi), by shooting with RK4 and
/// bisecting on the boundary value.  Interior node counts at the
/// bracket edges certify the bracket: throws BracketEmpty when it
/// contains no eigenvalue and BracketAmbiguous when it contains more
/// than one.
[[nodiscard]] double bound_state_energy(const SchrodingerWell& well, double e_lo,
                                        double e_hi, double tolerance = 1e-12,
                                        std::size_t steps = 8192);

}  // namespace evanwave::oracle
