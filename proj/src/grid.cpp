#include "evanwave/grid.hpp"

#include <stdexcept>

namespace evanwave {

namespace {

void check_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + " contains a non-finite sample");
    }
  }
}

void check_finite(std::span<const std::complex<double>> values, const char* what) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument(std::string(what) + " contains a non-finite sample");
    }
  }
}

}  // namespace

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (!(x_min < x_max)) {
    throw std::invalid_argument("grid requires x_min < x_max");
  }
  if (n_points < 3) {
    throw std::invalid_argument("grid requires at least 3 points");
  }
}

RealField1D::RealField1D(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("field length does not match grid size");
  }
  check_finite(values_, "field");
}

ComplexField1D::ComplexField1D(Grid1D grid, std::vector<std::complex<double>> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("field length does not match grid size");
  }
  check_finite(values_, "field");
}

PotentialProfile::PotentialProfile(Grid1D grid, std::vector<double> v)
    : grid_(grid), v_(std::move(v)) {
  if (v_.size() != grid_.size()) {
    throw std::invalid_argument("potential length does not match grid size");
  }
  check_finite(v_, "potential");
}

namespace num {

namespace {

template <class T>
std::vector<T> gradient_impl(std::span<const T> f, double h) {
  if (f.size() < 3) {
    throw std::invalid_argument("gradient requires at least 3 samples");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("gradient requires positive spacing");
  }
  const std::size_t n = f.size();
  std::vector<T> d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  }
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return d;
}

template <class T>
std::vector<T> second_derivative_impl(std::span<const T> f, double h) {
  if (f.size() < 3) {
    throw std::invalid_argument("second_derivative requires at least 3 samples");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("second_derivative requires positive spacing");
  }
  const std::size_t n = f.size();
  const double h2 = h * h;
  std::vector<T> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
  }
  if (n >= 4) {
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  } else {
    d[0] = (f[0] - 2.0 * f[1] + f[2]) / h2;
    d[n - 1] = d[0];
  }
  return d;
}

}  // namespace

std::vector<double> gradient(std::span<const double> f, double h) {
  return gradient_impl(f, h);
}

std::vector<std::complex<double>> gradient(std::span<const std::complex<double>> f,
                                           double h) {
  return gradient_impl(f, h);
}

std::vector<double> second_derivative(std::span<const double> f, double h) {
  return second_derivative_impl(f, h);
}

std::vector<std::complex<double>> second_derivative(
    std::span<const std::complex<double>> f, double h) {
  return second_derivative_impl(f, h);
}

double integrate_simpson(std::span<const double> f, double h, std::size_t first,
                         std::size_t last) {
  if (last >= f.size() || first > last) {
    throw std::invalid_argument("integration range is out of bounds");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("integration requires positive spacing");
  }
  std::size_t m = last - first;  // interval count
  if (m == 0) {
    return 0.0;
  }
  if (m == 1) {
    return 0.5 * h * (f[first] + f[last]);
  }
  double total = 0.0;
  std::size_t end = last;
  if (m % 2 != 0) {
    // Close the final three intervals with the 3/8 rule.
    end = last - 3;
    total += 3.0 * h / 8.0 *
             (f[end] + 3.0 * f[end + 1] + 3.0 * f[end + 2] + f[end + 3]);
    m -= 3;
  }
  if (m > 0) {
    double s = f[first] + f[end];
    for (std::size_t i = first + 1; i < end; ++i) {
      s += ((i - first) % 2 == 1 ? 4.0 : 2.0) * f[i];
    }
    total += h / 3.0 * s;
  }
  return total;
}

}  // namespace num

}  // namespace evanwave
