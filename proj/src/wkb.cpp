#include "evanwave/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace evanwave::wkb {

namespace {

constexpr double kTinyAmplitude = 1e-300;
// Largest representable nearest-branch step; remainder() never exceeds pi.
const double kUnwrapLimit = std::numbers::pi * (1.0 - 1e-12);

double classification_tol(const PotentialProfile& potential, double tol_scale) {
  if (!(tol_scale >= 0.0)) {
    throw std::invalid_argument("tolerance scale must be non-negative");
  }
  double vmax = 0.0;
  for (double v : potential.v()) {
    vmax = std::max(vmax, std::abs(v));
  }
  return tol_scale * vmax;
}

RegionKind classify_point(double v, double tol) {
  if (v > tol) {
    return RegionKind::Forbidden;
  }
  if (v < -tol) {
    return RegionKind::Allowed;
  }
  return RegionKind::TurningPoint;
}

void check_range(const PotentialProfile& potential, std::size_t first,
                 std::size_t last) {
  if (last >= potential.size() || first > last) {
    throw std::invalid_argument("region indices are out of bounds");
  }
}

// Euclidean action over [first, last] for the shifted barrier V + shift.
double euclidean_action(const PotentialProfile& potential, std::size_t first,
                        std::size_t last, double shift, double tol) {
  std::vector<double> integrand(last - first + 1);
  for (std::size_t i = first; i <= last; ++i) {
    const double v = potential[i] + shift;
    if (v < -tol) {
      throw MixedRegion("shifted potential leaves the forbidden region");
    }
    integrand[i - first] = std::sqrt(std::max(2.0 * v, 0.0));
  }
  return num::integrate_simpson(integrand, potential.grid().spacing(), 0,
                                integrand.size() - 1);
}

}  // namespace

PhaseSplit split_phase(const ComplexField1D& psi, const ComplexField1D& prefactor,
                       double hbar) {
  if (psi.grid() != prefactor.grid()) {
    throw GridMismatch("psi and prefactor live on different grids");
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be positive");
  }
  const std::size_t n = psi.size();
  std::vector<double> s_real(n);
  std::vector<double> s_imag(n);
  double phase_prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(psi[i]) < kTinyAmplitude || std::abs(prefactor[i]) < kTinyAmplitude) {
      throw ZeroAmplitude("sample too close to zero to take its phase");
    }
    const std::complex<double> ratio = psi[i] / prefactor[i];
    const double theta = std::arg(ratio);
    double phase;
    if (i == 0) {
      phase = theta;
    } else {
      const double step =
          std::remainder(theta - std::remainder(phase_prev, 2.0 * std::numbers::pi),
                         2.0 * std::numbers::pi);
      if (std::abs(step) >= kUnwrapLimit) {
        throw UnwrapAmbiguity("phase step between neighbouring samples reaches pi");
      }
      phase = phase_prev + step;
    }
    s_real[i] = -hbar * std::log(std::abs(ratio));
    s_imag[i] = -hbar * phase;
    phase_prev = phase;
  }
  return PhaseSplit{RealField1D(psi.grid(), std::move(s_real)),
                    RealField1D(psi.grid(), std::move(s_imag))};
}

ClassicalResidual hj_residual_classical(const RealField1D& s_real,
                                        const RealField1D& s_imag,
                                        const PotentialProfile& potential) {
  if (s_real.grid() != s_imag.grid() || s_real.grid() != potential.grid()) {
    throw GridMismatch("phase fields and potential live on different grids");
  }
  const double h = potential.grid().spacing();
  const auto dsr = num::gradient(s_real.values(), h);
  const auto dsi = num::gradient(s_imag.values(), h);
  const std::size_t n = potential.size();
  std::vector<double> real_eq(n);
  std::vector<double> imag_eq(n);
  for (std::size_t i = 0; i < n; ++i) {
    real_eq[i] = -0.5 * dsr[i] * dsr[i] + 0.5 * dsi[i] * dsi[i] + potential[i];
    imag_eq[i] = dsr[i] * dsi[i];
  }
  return ClassicalResidual{RealField1D(potential.grid(), std::move(real_eq)),
                           RealField1D(potential.grid(), std::move(imag_eq))};
}

QuantumResidual hj_residual_quantum(const ComplexField1D& prefactor,
                                    const RealField1D& s_real,
                                    const RealField1D& s_imag,
                                    const PotentialProfile& potential, double hbar) {
  if (prefactor.grid() != s_real.grid() || s_real.grid() != s_imag.grid() ||
      s_real.grid() != potential.grid()) {
    throw GridMismatch("fields and potential live on different grids");
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be positive");
  }
  const double h = potential.grid().spacing();
  const auto dc = num::gradient(prefactor.values(), h);
  const auto d2c = num::second_derivative(prefactor.values(), h);
  const auto dsr = num::gradient(s_real.values(), h);
  const auto d2sr = num::second_derivative(s_real.values(), h);
  const auto dsi = num::gradient(s_imag.values(), h);
  const auto d2si = num::second_derivative(s_imag.values(), h);
  const std::size_t n = potential.size();
  std::vector<std::complex<double>> real_eq(n);
  std::vector<double> imag_eq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> c = prefactor[i];
    real_eq[i] = (-0.5 * dsr[i] * dsr[i] + 0.5 * dsi[i] * dsi[i] + potential[i] +
                  0.5 * hbar * d2sr[i]) *
                     c +
                 hbar * dsr[i] * dc[i] - 0.5 * hbar * hbar * d2c[i];
    imag_eq[i] =
        (-c * dsr[i] * dsi[i] + hbar * (0.5 * c * d2si[i] + dsi[i] * dc[i])).real();
  }
  return QuantumResidual{ComplexField1D(potential.grid(), std::move(real_eq)),
                         RealField1D(potential.grid(), std::move(imag_eq))};
}

RegionClassification classify_regions(const PotentialProfile& potential,
                                      double tol_scale) {
  const double tol = classification_tol(potential, tol_scale);
  const std::size_t n = potential.size();
  std::vector<Region> regions;
  std::size_t start = 0;
  RegionKind kind = classify_point(potential[0], tol);
  for (std::size_t i = 1; i <= n; ++i) {
    const RegionKind next = i < n ? classify_point(potential[i], tol) : kind;
    if (i == n || next != kind) {
      regions.push_back(Region{start, i - 1, potential.grid().x(start),
                               potential.grid().x(i - 1), kind});
      if (i == n) {
        break;
      }
      start = i;
      kind = next;
    }
  }
  return RegionClassification{std::move(regions)};
}

ActionPair wkb_action(const PotentialProfile& potential, std::size_t first,
                      std::size_t last, double tol_scale) {
  check_range(potential, first, last);
  const double tol = classification_tol(potential, tol_scale);
  bool has_forbidden = false;
  bool has_allowed = false;
  for (std::size_t i = first; i <= last; ++i) {
    const RegionKind kind = classify_point(potential[i], tol);
    has_forbidden |= kind == RegionKind::Forbidden;
    has_allowed |= kind == RegionKind::Allowed;
  }
  if (has_forbidden && has_allowed) {
    throw MixedRegion("interval contains allowed and forbidden points");
  }
  const double h = potential.grid().spacing();
  std::vector<double> integrand(last - first + 1);
  ActionPair actions{0.0, 0.0};
  if (has_forbidden) {
    for (std::size_t i = first; i <= last; ++i) {
      integrand[i - first] = std::sqrt(std::max(2.0 * potential[i], 0.0));
    }
    actions.euclidean = num::integrate_simpson(integrand, h, 0, integrand.size() - 1);
  } else if (has_allowed) {
    for (std::size_t i = first; i <= last; ++i) {
      integrand[i - first] = std::sqrt(std::max(-2.0 * potential[i], 0.0));
    }
    actions.lorentzian = num::integrate_simpson(integrand, h, 0, integrand.size() - 1);
  }
  return actions;
}

ActionPair wkb_action(const PotentialProfile& potential, const Region& region,
                      double tol_scale) {
  return wkb_action(potential, region.first, region.last, tol_scale);
}

double imaginary_time_lapse(const PotentialProfile& potential, std::size_t first,
                            std::size_t last, double d_e, double tol_scale) {
  check_range(potential, first, last);
  if (!(d_e > 0.0)) {
    throw std::invalid_argument("energy step must be positive");
  }
  const double tol = classification_tol(potential, tol_scale);
  for (std::size_t i = first; i <= last; ++i) {
    if (classify_point(potential[i], tol) != RegionKind::Forbidden) {
      throw MixedRegion("imaginary-time lapse requires a forbidden region");
    }
    // Raising the energy by d_e lowers V; the region must stay forbidden.
    if (classify_point(potential[i] - d_e, tol) != RegionKind::Forbidden) {
      throw RegionChanged("energy shift removes part of the forbidden region");
    }
  }
  const double s_plus = euclidean_action(potential, first, last, -d_e, tol);
  const double s_minus = euclidean_action(potential, first, last, d_e, tol);
  return std::abs((s_minus - s_plus) / (2.0 * d_e));
}

double imaginary_time_lapse(const PotentialProfile& potential, const Region& region,
                            double d_e, double tol_scale) {
  return imaginary_time_lapse(potential, region.first, region.last, d_e, tol_scale);
}

}  // namespace evanwave::wkb
