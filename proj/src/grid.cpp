#include "levyslab/grid.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace levyslab {

Grid1D::Grid1D(double half_width, std::size_t n_points)
    : half_width_(half_width), n_points_(n_points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("Grid1D: half-width must be positive and finite");
  }
  if (n_points < 8 || !std::has_single_bit(n_points)) {
    throw GridError("Grid1D: N must be a power of two >= 8, got " +
                    std::to_string(n_points));
  }
}

Eigen::ArrayXd Grid1D::points() const {
  Eigen::ArrayXd r(static_cast<Eigen::Index>(n_points_));
  for (std::size_t j = 0; j < n_points_; ++j) {
    r[static_cast<Eigen::Index>(j)] = point(j);
  }
  return r;
}

}  // namespace levyslab
