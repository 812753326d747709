#include "evanwave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace evanwave::oracle {

namespace {

using Complex = std::complex<double>;

struct State {
  Complex psi;
  Complex dpsi;
};

struct Segment {
  double lo;
  double hi;
};

// Keeps stage evaluations strictly inside one segment so a coefficient
// discontinuity sitting exactly on a segment edge resolves to this
// segment's side.
template <class F>
class SegmentEval {
 public:
  SegmentEval(const F& coefficient, const Segment& segment)
      : coefficient_(coefficient),
        lo_(segment.lo + (segment.hi - segment.lo) * 1e-12),
        hi_(segment.hi - (segment.hi - segment.lo) * 1e-12) {}

  double operator()(double z) const {
    return coefficient_(std::clamp(z, lo_, hi_));
  }

 private:
  const F& coefficient_;
  double lo_;
  double hi_;
};

template <class C>
State rk4_step(const C& c, double z, double h, const State& y) {
  const double c0 = c(z);
  const double c1 = c(z + 0.5 * h);
  const double c2 = c(z + h);
  const auto rhs = [](double cc, const State& s) {
    return State{s.dpsi, -cc * s.psi};
  };
  const State k1 = rhs(c0, y);
  const State k2 = rhs(c1, {y.psi + 0.5 * h * k1.psi, y.dpsi + 0.5 * h * k1.dpsi});
  const State k3 = rhs(c1, {y.psi + 0.5 * h * k2.psi, y.dpsi + 0.5 * h * k2.dpsi});
  const State k4 = rhs(c2, {y.psi + h * k3.psi, y.dpsi + h * k3.dpsi});
  return State{y.psi + h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi),
               y.dpsi + h / 6.0 * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi)};
}

void check_profile(const CoefficientProfile& profile) {
  if (!profile.coefficient) {
    throw std::invalid_argument("profile has no coefficient callable");
  }
  if (!std::isfinite(profile.z_entry) || !std::isfinite(profile.z_exit) ||
      profile.z_entry > profile.z_exit) {
    throw std::invalid_argument("profile requires finite z_entry <= z_exit");
  }
  if (!std::isfinite(profile.entry_coefficient) ||
      !std::isfinite(profile.exit_coefficient)) {
    throw std::invalid_argument("asymptotic coefficients must be finite");
  }
}

// Cuts [lo, hi] at the interior breakpoints, dropping empty pieces.
std::vector<Segment> cut_segments(double lo, double hi,
                               std::span<const double> breakpoints) {
  std::vector<double> points;
  points.push_back(lo);
  for (double b : breakpoints) {
    if (b > lo && b < hi) {
      points.push_back(b);
    }
  }
  points.push_back(hi);
  std::sort(points.begin(), points.end());
  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] > points[i]) {
      segments.push_back(Segment{points[i], points[i + 1]});
    }
  }
  return segments;
}

State exit_state(const CoefficientProfile& profile) {
  const double c_exit = profile.exit_coefficient;
  if (c_exit == 0.0) {
    throw std::invalid_argument("exit coefficient must be nonzero");
  }
  if (c_exit > 0.0) {
    return State{1.0, Complex{0.0, std::sqrt(c_exit)}};
  }
  return State{1.0, Complex{-std::sqrt(-c_exit), 0.0}};
}

// Marches the pure transmitted wave from z_exit back to z_entry with
// about n_target RK4 steps spread over the segments.
State march_back(const CoefficientProfile& profile,
                 const std::vector<Segment>& segments, std::size_t n_target) {
  const double span = profile.z_exit - profile.z_entry;
  const double h_target = span / static_cast<double>(n_target);
  State y = exit_state(profile);
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    const double len = it->hi - it->lo;
    const auto n = static_cast<std::size_t>(
        std::max(1.0, std::ceil(len / h_target * (1.0 - 1e-12))));
    const double h = len / static_cast<double>(n);
    const SegmentEval c(profile.coefficient, *it);
    for (std::size_t i = 0; i < n; ++i) {
      const double z = it->hi - static_cast<double>(i) * h;
      y = rk4_step(c, z, -h, y);
    }
  }
  return y;
}

Amplitudes split_at_entry(const CoefficientProfile& profile, const State& y) {
  const double k_in = std::sqrt(profile.entry_coefficient);
  const Complex ik{0.0, k_in};
  const Complex incident = 0.5 * (y.psi + y.dpsi / ik);
  const Complex reflected = 0.5 * (y.psi - y.dpsi / ik);
  return Amplitudes{reflected / incident, 1.0 / incident};
}

double amplitude_change(const Amplitudes& a, const Amplitudes& b) {
  const double t_scale = std::max(std::abs(b.t), 1e-300);
  return std::max(std::abs(a.r - b.r), std::abs(a.t - b.t) / t_scale);
}

}  // namespace

Profile1D::Profile1D(Grid1D grid, std::vector<double> coefficient)
    : grid_(grid), c_(std::move(coefficient)) {
  if (c_.size() != grid_.size()) {
    throw std::invalid_argument("coefficient length does not match grid size");
  }
  for (double v : c_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("coefficient contains a non-finite sample");
    }
  }
  const std::size_t tail = std::min(std::max<std::size_t>(2, c_.size() / 20),
                                    c_.size());
  const auto constant_tail = [&](std::size_t begin, std::size_t end, double ref) {
    const double tol = 1e-12 * std::max(1.0, std::abs(ref));
    for (std::size_t i = begin; i < end; ++i) {
      if (std::abs(c_[i] - ref) > tol) {
        return false;
      }
    }
    return true;
  };
  if (!constant_tail(0, tail, c_.front()) ||
      !constant_tail(c_.size() - tail, c_.size(), c_.back())) {
    throw std::invalid_argument("profile tails must be constant asymptotic media");
  }
}

CoefficientProfile make_profile(const Profile1D& sampled) {
  const Grid1D grid = sampled.grid();
  std::vector<double> c(sampled.coefficient().begin(), sampled.coefficient().end());
  auto interpolant = [grid, c = std::move(c)](double z) {
    if (z <= grid.x_min()) {
      return c.front();
    }
    if (z >= grid.x_max()) {
      return c.back();
    }
    const double u = (z - grid.x_min()) / grid.spacing();
    const auto i = std::min(static_cast<std::size_t>(u), grid.size() - 2);
    const double frac = u - static_cast<double>(i);
    return std::lerp(c[i], c[i + 1], frac);
  };
  return CoefficientProfile{std::move(interpolant),
                            grid.x_min(),
                            grid.x_max(),
                            sampled.coefficient().front(),
                            sampled.coefficient().back(),
                            {}};
}

CoefficientProfile helmholtz_profile(const layered::MediumStack& stack,
                                     const layered::Incidence& inc) {
  if (inc.polarization != layered::Polarization::S) {
    throw std::invalid_argument(
        "the scalar Helmholtz reduction only represents S polarization");
  }
  const double k_x = layered::transverse_wavenumber(stack.entry, inc);
  const double kx2 = k_x * k_x;
  const double w2 = inc.omega * inc.omega;

  std::vector<double> bounds;  // upper edge of each layer
  std::vector<double> values;  // coefficient inside each layer
  double depth = 0.0;
  for (const auto& layer : stack.layers) {
    depth += layer.thickness;
    bounds.push_back(depth);
    values.push_back(w2 * layer.medium.n * layer.medium.n - kx2);
  }
  const double c_entry = w2 * stack.entry.n * stack.entry.n - kx2;
  const double c_exit = w2 * stack.exit.n * stack.exit.n - kx2;

  auto coefficient = [bounds, values, c_entry, c_exit](double z) {
    if (z < 0.0) {
      return c_entry;
    }
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (z < bounds[i]) {
        return values[i];
      }
    }
    return c_exit;
  };

  // Interior interfaces only; the matching planes z = 0 and z = depth
  // bound the integration domain themselves.
  std::vector<double> breakpoints;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    breakpoints.push_back(bounds[i]);
  }
  return CoefficientProfile{std::move(coefficient), 0.0,    depth,
                            c_entry,                c_exit, std::move(breakpoints)};
}

Amplitudes integrate_helmholtz_1d(const CoefficientProfile& profile,
                                  const IntegrationOptions& options) {
  check_profile(profile);
  if (profile.entry_coefficient <= 0.0) {
    throw EvanescentEntry("entry side carries no travelling wave");
  }
  if (!(options.tolerance > 0.0) || options.initial_steps == 0) {
    throw std::invalid_argument("integration options out of range");
  }
  const auto segments = cut_segments(profile.z_entry, profile.z_exit,
                                  profile.breakpoints);
  if (segments.empty()) {
    return split_at_entry(profile, exit_state(profile));
  }
  std::size_t n = options.initial_steps;
  Amplitudes prev = split_at_entry(profile, march_back(profile, segments, n));
  while (true) {
    n *= 2;
    if (n > options.max_steps) {
      throw NoConvergence("step halving exhausted the step budget");
    }
    const Amplitudes next = split_at_entry(profile, march_back(profile, segments, n));
    if (amplitude_change(next, prev) < options.tolerance) {
      return next;
    }
    prev = next;
  }
}

Amplitudes integrate_helmholtz_1d(const Profile1D& sampled,
                                  const IntegrationOptions& options) {
  return integrate_helmholtz_1d(make_profile(sampled), options);
}

ComplexField1D solve_field(const CoefficientProfile& profile, std::size_t n_points,
                           std::size_t steps_per_cell) {
  check_profile(profile);
  if (steps_per_cell == 0) {
    throw std::invalid_argument("steps_per_cell must be positive");
  }
  if (!(profile.z_exit > profile.z_entry)) {
    throw std::invalid_argument("solve_field needs a profile with positive extent");
  }
  const Grid1D grid(profile.z_entry, profile.z_exit, n_points);
  std::vector<Complex> values(n_points);
  State y = exit_state(profile);
  values[n_points - 1] = y.psi;
  for (std::size_t cell = n_points - 1; cell-- > 0;) {
    // Split the cell at breakpoints so no RK4 step straddles a jump.
    const double lo = grid.x(cell);
    const double hi = grid.x(cell + 1);
    const auto segments = cut_segments(lo, hi, profile.breakpoints);
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
      const double len = it->hi - it->lo;
      const auto n = static_cast<std::size_t>(std::max(
          1.0, std::ceil(static_cast<double>(steps_per_cell) * len / (hi - lo))));
      const double h = len / static_cast<double>(n);
      const SegmentEval c(profile.coefficient, *it);
      for (std::size_t i = 0; i < n; ++i) {
        const double z = it->hi - static_cast<double>(i) * h;
        y = rk4_step(c, z, -h, y);
      }
    }
    values[cell] = y.psi;
  }
  return ComplexField1D(grid, std::move(values));
}

DecayFit transmission_slope(const std::function<CoefficientProfile(double)>& family,
                            std::span<const double> widths,
                            const IntegrationOptions& options) {
  if (!family) {
    throw std::invalid_argument("transmission_slope needs a profile family");
  }
  const std::size_t n = widths.size();
  if (n < 4) {
    throw std::invalid_argument("decay fit requires at least four widths");
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(widths[i])) {
      throw std::invalid_argument("widths must be finite");
    }
    const Amplitudes amps = integrate_helmholtz_1d(family(widths[i]), options);
    y[i] = std::log(std::abs(amps.t));
  }
  double wbar = 0.0;
  double ybar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    wbar += widths[i];
    ybar += y[i];
  }
  wbar /= static_cast<double>(n);
  ybar /= static_cast<double>(n);
  double sww = 0.0;
  double swy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sww += (widths[i] - wbar) * (widths[i] - wbar);
    swy += (widths[i] - wbar) * (y[i] - ybar);
  }
  if (!(sww > 0.0)) {
    throw std::invalid_argument("widths must not be all equal");
  }
  const double slope = swy / sww;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = y[i] - ybar - slope * (widths[i] - wbar);
    ss_res += resid * resid;
  }
  const double var_slope = ss_res / static_cast<double>(n - 2) / sww;
  return DecayFit{-slope, std::sqrt(var_slope), ybar - slope * wbar};
}

namespace {

struct ShotResult {
  double boundary_value;
  std::size_t nodes;
};

// Shooting solution from psi(z_min) = 0, psi'(z_min) = 1; interior sign
// changes count the nodes that certify an energy bracket.
ShotResult shoot(const SchrodingerWell& well, double energy, std::size_t steps) {
  const double span = well.z_max - well.z_min;
  const double h = span / static_cast<double>(steps);
  const double scale = 2.0 * well.mass / (well.hbar * well.hbar);
  const auto coefficient = [&](double z) {
    return scale * (energy - well.potential(z));
  };
  const SegmentEval c(coefficient, Segment{well.z_min, well.z_max});
  State y{0.0, 1.0};
  std::size_t nodes = 0;
  double prev = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double z = well.z_min + static_cast<double>(i) * h;
    y = rk4_step(c, z, h, y);
    const double value = y.psi.real();
    if (prev != 0.0 && value * prev < 0.0) {
      ++nodes;
    }
    if (value != 0.0) {
      prev = value;
    }
  }
  return ShotResult{y.psi.real(), nodes};
}

}  // namespace

double bound_state_energy(const SchrodingerWell& well, double e_lo, double e_hi,
                          double tolerance, std::size_t steps) {
  if (!well.potential) {
    throw std::invalid_argument("well has no potential callable");
  }
  if (!(well.z_min < well.z_max) || !(well.mass > 0.0) || !(well.hbar > 0.0)) {
    throw std::invalid_argument("well geometry or constants out of range");
  }
  if (!(e_lo < e_hi) || !std::isfinite(e_lo) || !std::isfinite(e_hi)) {
    throw std::invalid_argument("energy bracket must be finite with e_lo < e_hi");
  }
  if (!(tolerance > 0.0) || steps < 16) {
    throw std::invalid_argument("tolerance or step count out of range");
  }
  const ShotResult lo = shoot(well, e_lo, steps);
  const ShotResult hi = shoot(well, e_hi, steps);
  if (hi.nodes < lo.nodes) {
    throw BracketAmbiguous("node count decreased with energy; bracket unusable");
  }
  const std::size_t crossings = hi.nodes - lo.nodes;
  if (crossings == 0) {
    throw BracketEmpty("bracket contains no eigenvalue");
  }
  if (crossings > 1) {
    throw BracketAmbiguous("bracket contains more than one eigenvalue");
  }
  double a = e_lo;
  double b = e_hi;
  double fa = lo.boundary_value;
  while (b - a > tolerance) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) {
      break;  // interval narrower than the floating-point spacing
    }
    const double fm = shoot(well, mid, steps).boundary_value;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace evanwave::oracle
