#pragma once

#include <complex>
#include <cstddef>
#include <utility>

#include <Eigen/Dense>

#include "levyslab/errors.hpp"

namespace levyslab {

/// Uniform periodic grid r_j = -L + j h, j = 0..N-1, h = 2L/N, on [-L, L).
/// The point r = +L is the periodic image of r = -L.
class Grid1D {
 public:
  /// Throws DomainError if L <= 0 and GridError unless N >= 8 is a power
  /// of two.
  Grid1D(double half_width, std::size_t n_points);

  double half_width() const noexcept { return half_width_; }
  std::size_t n_points() const noexcept { return n_points_; }
  double spacing() const noexcept { return 2.0 * half_width_ / n_points_; }
  double point(std::size_t j) const noexcept {
    return -half_width_ + static_cast<double>(j) * spacing();
  }
  /// Index of the mirror point -r_j (index 0 maps to itself).
  std::size_t mirror(std::size_t j) const noexcept {
    return (n_points_ - j) % n_points_;
  }
  Eigen::ArrayXd points() const;

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double half_width_;
  std::size_t n_points_;
};

/// Complex samples of a function on a Grid1D, stored with real type Real.
template <class Real>
class BasicSamples {
 public:
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// Zero samples.
  explicit BasicSamples(const Grid1D& grid)
      : grid_(grid),
        values_(Vector::Zero(static_cast<Eigen::Index>(grid.n_points()))) {}

  /// Throws GridError if values.size() != grid.n_points().
  BasicSamples(const Grid1D& grid, Vector values)
      : grid_(grid), values_(std::move(values)) {
    if (static_cast<std::size_t>(values_.size()) != grid_.n_points()) {
      throw GridError("ComplexSamples: sample count does not match the grid");
    }
  }

  /// Samples f(r_j).
  template <class F>
  static BasicSamples from_function(const Grid1D& grid, F&& f) {
    Vector v(static_cast<Eigen::Index>(grid.n_points()));
    for (std::size_t j = 0; j < grid.n_points(); ++j) {
      v[static_cast<Eigen::Index>(j)] = Scalar(f(grid.point(j)));
    }
    return BasicSamples(grid, std::move(v));
  }

  const Grid1D& grid() const noexcept { return grid_; }
  const Vector& values() const noexcept { return values_; }
  Vector& values() noexcept { return values_; }
  Scalar operator[](std::size_t j) const {
    return values_[static_cast<Eigen::Index>(j)];
  }

  /// Discrete L2 norm sqrt(h sum |f_j|^2).
  Real l2_norm() const {
    using std::sqrt;
    return sqrt(Real(grid_.spacing()) * values_.squaredNorm());
  }

  /// Samples rounded or widened to another real type.
  template <class Other>
  BasicSamples<Other> cast() const {
    return BasicSamples<Other>(
        grid_, values_.template cast<std::complex<Other>>());
  }

 private:
  Grid1D grid_;
  Vector values_;
};

using ComplexSamples = BasicSamples<double>;

}  // namespace levyslab
