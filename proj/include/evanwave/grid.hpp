#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "evanwave/errors.hpp"

namespace evanwave {

/// Uniform one-dimensional grid on [x_min, x_max] with at least three
/// points.  Endpoints are reproduced exactly by x().
class Grid1D {
 public:
  Grid1D(double x_min, double x_max, std::size_t n_points);

  [[nodiscard]] double x_min() const { return x_min_; }
  [[nodiscard]] double x_max() const { return x_max_; }
  [[nodiscard]] std::size_t size() const { return n_; }

  [[nodiscard]] double spacing() const {
    return (x_max_ - x_min_) / static_cast<double>(n_ - 1);
  }

  [[nodiscard]] double x(std::size_t i) const {
    const double f = static_cast<double>(i) / static_cast<double>(n_ - 1);
    return std::lerp(x_min_, x_max_, f);
  }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
};

/// Real scalar field sampled on a Grid1D.  All samples are finite.
class RealField1D {
 public:
  RealField1D(Grid1D grid, std::vector<double> values);

  [[nodiscard]] const Grid1D& grid() const { return grid_; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

/// Complex scalar field sampled on a Grid1D.  All samples are finite.
class ComplexField1D {
 public:
  ComplexField1D(Grid1D grid, std::vector<std::complex<double>> values);

  [[nodiscard]] const Grid1D& grid() const { return grid_; }
  [[nodiscard]] std::span<const std::complex<double>> values() const {
    return values_;
  }
  [[nodiscard]] std::complex<double> operator[](std::size_t i) const {
    return values_[i];
  }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

 private:
  Grid1D grid_;
  std::vector<std::complex<double>> values_;
};

/// Potential profile in zero-energy form: V(x) = U(x) - E, so V > 0 is
/// classically forbidden and V < 0 is allowed.
class PotentialProfile {
 public:
  PotentialProfile(Grid1D grid, std::vector<double> v);

  [[nodiscard]] const Grid1D& grid() const { return grid_; }
  [[nodiscard]] std::span<const double> v() const { return v_; }
  [[nodiscard]] double operator[](std::size_t i) const { return v_[i]; }
  [[nodiscard]] std::size_t size() const { return v_.size(); }

 private:
  Grid1D grid_;
  std::vector<double> v_;
};

namespace num {

/// First derivative of uniformly sampled data: centred second-order
/// differences inside, second-order one-sided stencils at the ends.
std::vector<double> gradient(std::span<const double> f, double h);
std::vector<std::complex<double>> gradient(std::span<const std::complex<double>> f,
                                           double h);

/// Second derivative of uniformly sampled data, second order throughout
/// (one-sided four-point stencils at the ends when enough points exist).
std::vector<double> second_derivative(std::span<const double> f, double h);
std::vector<std::complex<double>> second_derivative(
    std::span<const std::complex<double>> f, double h);

/// Composite Simpson rule over an index range [first, last] of uniformly
/// sampled data.  Odd interval counts close with the 3/8 rule; a single
/// interval falls back to the trapezoid rule.
double integrate_simpson(std::span<const double> f, double h, std::size_t first,
                         std::size_t last);

}  // namespace num

}  // namespace evanwave
