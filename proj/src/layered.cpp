#include "evanwave/layered.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace evanwave::layered {

namespace {

using std::numbers::pi;
using Complex = std::complex<double>;

constexpr Complex kImag{0.0, 1.0};
const double kPhaseLimit = pi * (1.0 - 1e-12);

double admittance_weight(const Medium& medium, Polarization polarization) {
  return polarization == Polarization::S ? 1.0 : 1.0 / (medium.n * medium.n);
}

void check_index(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("refractive index must be positive and finite");
  }
}

Complex admittance(const Medium& medium, double omega, double k_x,
                   Polarization polarization) {
  return kz(medium, omega, k_x) * admittance_weight(medium, polarization);
}

struct Matrix2 {
  Complex m11, m12, m21, m22;
};

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

// Transfer matrix of one layer acting on (u, u'/q): unimodular for any
// complex phase delta = k_z d.
Matrix2 layer_matrix(Complex delta, Complex q) {
  const Complex c = std::cos(delta);
  const Complex s = std::sin(delta);
  return {c, s / q, -q * s, c};
}

ScatteringResult scatter_fixed_kx(const MediumStack& stack, double omega,
                                  double k_x, Polarization polarization);

}  // namespace

Medium::Medium(double n) : n(n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("refractive index must be positive and finite");
  }
}

Layer::Layer(Medium medium, double thickness) : medium(medium), thickness(thickness) {
  if (!(thickness > 0.0) || !std::isfinite(thickness)) {
    throw std::invalid_argument("layer thickness must be positive and finite");
  }
}

MediumStack::MediumStack(Medium entry, std::vector<Layer> layers, Medium exit)
    : entry(entry), layers(std::move(layers)), exit(exit) {}

double MediumStack::total_thickness() const {
  double d = 0.0;
  for (const Layer& layer : layers) {
    d += layer.thickness;
  }
  return d;
}

Incidence::Incidence(double omega, double theta0, Polarization polarization)
    : omega(omega), theta0(theta0), polarization(polarization) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("frequency must be positive and finite");
  }
  if (!(theta0 >= 0.0) || !(theta0 < pi / 2.0)) {
    throw std::invalid_argument("incidence angle must lie in [0, pi/2)");
  }
}

double transverse_wavenumber(const Medium& entry, const Incidence& inc) {
  return inc.omega * entry.n * std::sin(inc.theta0);
}

Complex kz(const Medium& medium, double omega, double k_x) {
  if (!(omega > 0.0) || !std::isfinite(omega) || !std::isfinite(k_x)) {
    throw std::invalid_argument("kz requires positive omega and finite k_x");
  }
  const double s = omega * omega * medium.n * medium.n - k_x * k_x;
  if (s >= 0.0) {
    return {std::sqrt(s), 0.0};
  }
  return {0.0, std::sqrt(-s)};
}

Complex refraction_angle(double n1, double n2, double theta0) {
  check_index(n1);
  check_index(n2);
  if (!(theta0 >= 0.0) || !(theta0 < pi / 2.0)) {
    throw std::invalid_argument("incidence angle must lie in [0, pi/2)");
  }
  const double s = n1 * std::sin(theta0) / n2;
  if (s <= 1.0) {
    return {std::asin(s), 0.0};
  }
  return {pi / 2.0, -std::acosh(s)};
}

std::optional<double> critical_angle(double n1, double n2) {
  check_index(n1);
  check_index(n2);
  if (n1 < n2) {
    return std::nullopt;
  }
  return std::asin(n2 / n1);
}

InterfaceAmplitudes interface_amplitudes(double n1, double n2, const Incidence& inc) {
  return detail::interface_amplitudes_with_branch(n1, n2, inc, 1.0);
}

namespace detail {

InterfaceAmplitudes interface_amplitudes_with_branch(double n1, double n2,
                                                     const Incidence& inc,
                                                     double exit_branch_sign) {
  const Medium entry{n1};
  const Medium exit{n2};
  const double k_x = transverse_wavenumber(entry, inc);
  const Complex q1 = admittance(entry, inc.omega, k_x, inc.polarization);
  const Complex k2z = exit_branch_sign * kz(exit, inc.omega, k_x);
  const Complex q2 = k2z * admittance_weight(exit, inc.polarization);
  return InterfaceAmplitudes{(q1 - q2) / (q1 + q2), 2.0 * q1 / (q1 + q2)};
}

}  // namespace detail

namespace {

ScatteringResult scatter_fixed_kx(const MediumStack& stack, double omega,
                                  double k_x, Polarization polarization) {
  const Complex q_in = admittance(stack.entry, omega, k_x, polarization);
  const Complex q_out = admittance(stack.exit, omega, k_x, polarization);

  Matrix2 m{1.0, 0.0, 0.0, 1.0};
  for (const Layer& layer : stack.layers) {
    const Complex kzj = kz(layer.medium, omega, k_x);
    if (std::abs(kzj) < 1e-14 * omega) {
      throw DegenerateMatrix("layer axial wavenumber indistinguishable from zero");
    }
    const Complex qj = kzj * admittance_weight(layer.medium, polarization);
    m = multiply(layer_matrix(kzj * layer.thickness, qj), m);
  }

  // Match u = 1 + r, u'/q_in = i(1 - r) at entry against t exp(i k_z z)
  // at exit: alpha and beta collect the two boundary conditions.
  const Complex alpha = kImag * q_out * m.m11 - m.m21;
  const Complex beta = kImag * q_in * m.m22 + q_in * q_out * m.m12;
  const Complex r = (beta - alpha) / (beta + alpha);
  // Equivalent to m11 (1 + r) + i q_in m12 (1 - r) via det m = 1, but free
  // of the exp(2 kappa d) cancellation that form suffers in deep gaps.
  const Complex t = 2.0 * kImag * q_in / (alpha + beta);

  ScatteringResult result{r, t, std::norm(r), 0.0, std::arg(t)};
  result.transmittance = q_out.real() / q_in.real() * std::norm(t);
  return result;
}

}  // namespace

ScatteringResult stack_scattering(const MediumStack& stack, const Incidence& inc) {
  const double k_x = transverse_wavenumber(stack.entry, inc);
  return scatter_fixed_kx(stack, inc.omega, k_x, inc.polarization);
}

double penetration_depth(double n1, double n2, const Incidence& inc) {
  check_index(n1);
  check_index(n2);
  const double s = n1 * std::sin(inc.theta0);
  const double arg = s * s - n2 * n2;
  if (arg <= 0.0) {
    throw NotEvanescent("incidence at or below the critical angle");
  }
  return 1.0 / (inc.omega * std::sqrt(arg));
}

double group_delay(const MediumStack& stack, const Incidence& inc, double d_omega) {
  if (d_omega < 0.0 || !std::isfinite(d_omega)) {
    throw std::invalid_argument("frequency step must be non-negative and finite");
  }
  const double h = d_omega > 0.0 ? d_omega : 1e-6 * inc.omega;
  const double offsets[4] = {-h, -h / 2.0, h / 2.0, h};
  // The packet's transverse spectrum is set by the beam geometry, so the
  // stationary-phase derivative runs over omega at fixed k_x, not fixed
  // angle.
  const double k_x = transverse_wavenumber(stack.entry, inc);
  double phase[4];
  double prev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double raw =
        scatter_fixed_kx(stack, inc.omega + offsets[i], k_x, inc.polarization)
            .phase_t;
    if (i == 0) {
      phase[i] = raw;
    } else {
      const double step = std::remainder(raw - prev, 2.0 * pi);
      if (std::abs(step) >= kPhaseLimit) {
        throw PhaseJump("transmission phase jumps by pi across the stencil");
      }
      phase[i] = prev + step;
    }
    prev = phase[i];
  }
  const double coarse = (phase[3] - phase[0]) / (2.0 * h);
  const double fine = (phase[2] - phase[1]) / h;
  return (4.0 * fine - coarse) / 3.0;
}

double effective_traversal_speed(const MediumStack& stack, const Incidence& inc,
                                 double d_omega) {
  const double d = stack.total_thickness();
  if (!(d > 0.0)) {
    throw std::invalid_argument("traversal speed needs a positive stack thickness");
  }
  return d / group_delay(stack, inc, d_omega);
}

std::vector<TirScanRow> tir_scan(double n1, double n2,
                                 std::span<const double> theta_grid, double omega,
                                 Polarization polarization) {
  std::vector<TirScanRow> rows;
  rows.reserve(theta_grid.size());
  for (double theta0 : theta_grid) {
    const Incidence inc{omega, theta0, polarization};
    TirScanRow row{theta0, refraction_angle(n1, n2, theta0),
                   std::abs(interface_amplitudes(n1, n2, inc).r), std::nullopt};
    if (n1 * std::sin(theta0) > n2) {
      row.depth = penetration_depth(n1, n2, inc);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace evanwave::layered
