#include "levyslab/eigenbox.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "levyslab/fractional_operators.hpp"
#include "levyslab/special_functions.hpp"

namespace levyslab {

namespace {

constexpr double kWallTolerance = 1e-10;

void require_index(int m, int lowest, const char* who) {
  if (m < lowest) {
    throw DomainError(std::string(who) + ": mode index out of range");
  }
}

// Samples of sin(pi q(j)) or cos(pi q(j)) where q is the phase in units of
// pi; sin_pi keeps the zeros exact.
template <class Real, class Phase>
BasicSamples<Real> trig_samples(const Grid1D& grid, bool use_sine,
                                Phase phase) {
  using std::sqrt;
  const Real amp = Real(1) / sqrt(Real(grid.half_width()));
  typename BasicSamples<Real>::Vector v(static_cast<Eigen::Index>(grid.n_points()));
  const Real n = static_cast<Real>(grid.n_points());
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    const Real q = phase(static_cast<Real>(j) / n);
    const Real s = use_sine ? sin_pi(q) : sin_pi(q + Real(0.5));
    v[static_cast<Eigen::Index>(j)] = amp * s;
  }
  return BasicSamples<Real>(grid, std::move(v));
}

}  // namespace

const char* to_string(Parity parity) noexcept {
  switch (parity) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    case Parity::shifted_cos: return "c";
    case Parity::shifted_sin: return "s";
  }
  return "?";
}

double odd_eigenvalue(int m, double half_width, double beta) {
  return std::pow(m * std::numbers::pi / half_width, beta);
}

double even_eigenvalue(int m, double half_width, double beta) {
  return std::pow((2 * m + 1) * std::numbers::pi / (2.0 * half_width), beta);
}

template <class Real>
EigenMode<Real> odd_mode(int m, const Grid1D& grid, double beta) {
  require_index(m, 1, "odd_mode");
  // m pi r_j / L = pi m (2 j/N - 1)
  auto samples = trig_samples<Real>(grid, true, [m](Real t) {
    return Real(m) * (Real(2) * t - Real(1));
  });
  return {m, Parity::odd, odd_eigenvalue(m, grid.half_width(), beta),
          std::move(samples)};
}

template <class Real>
EigenMode<Real> even_mode(int m, const Grid1D& grid, double beta) {
  require_index(m, 0, "even_mode");
  // (2m+1) pi r_j / (2L) = pi (2m+1)(2 j/N - 1) / 2
  auto samples = trig_samples<Real>(grid, false, [m](Real t) {
    return Real(2 * m + 1) * (Real(2) * t - Real(1)) / Real(2);
  });
  return {m, Parity::even, even_eigenvalue(m, grid.half_width(), beta),
          std::move(samples)};
}

template <class Real>
SamplePair<Real> degenerate_pair(int m, const Grid1D& grid) {
  require_index(m, 1, "degenerate_pair");
  // m pi (2 r_j + L) / (2L) = pi m (4 j/N - 1) / 2
  auto phase = [m](Real t) {
    return Real(m) * (Real(4) * t - Real(1)) / Real(2);
  };
  return {trig_samples<Real>(grid, false, phase),
          trig_samples<Real>(grid, true, phase)};
}

template <class Real>
Parity boundary_member(const SamplePair<Real>& pair, int m) {
  using std::abs;
  // Index 0 is r = -L, whose periodic image is r = +L.
  const bool cos_vanishes = abs(pair.first[0]) <= Real(kWallTolerance);
  const bool sin_vanishes = abs(pair.second[0]) <= Real(kWallTolerance);
  if (cos_vanishes == sin_vanishes) {
    throw SelectionError(
        "select_by_boundary: cannot select a wall-vanishing member for m = " +
        std::to_string(m));
  }
  return cos_vanishes ? Parity::shifted_cos : Parity::shifted_sin;
}

namespace {

template <class Real>
double relative_residual(const BasicSamples<Real>& f,
                         const BasicSamples<Real>& applied, double eigenvalue) {
  const Real e = eigenvalue;
  return static_cast<double>((applied.values() - e * f.values()).norm() /
                             f.values().norm());
}

template <class Real>
void require_nonzero(const BasicSamples<Real>& f) {
  if (f.values().norm() == Real(0)) {
    throw ZeroFunction("eigen_residual: zero function");
  }
}

}  // namespace

template <class Real>
double eigen_residual(
    const BasicSamples<Real>& mode_samples,
    const std::type_identity_t<std::function<Real(Real)>>& symbol,
    double eigenvalue) {
  require_nonzero(mode_samples);
  return relative_residual(
      mode_samples, apply_fourier_multiplier<Real>(mode_samples, symbol),
      eigenvalue);
}

template <class Real>
double eigen_residual(const BasicSamples<Real>& mode_samples, double beta,
                      double eigenvalue) {
  require_nonzero(mode_samples);
  return relative_residual(mode_samples, riesz_apply(mode_samples, beta),
                           eigenvalue);
}

namespace {

template <class Real>
double max_deviation(const BasicSamples<Real>& f,
                     const BasicSamples<Real>& applied, double eigenvalue) {
  const Real e = eigenvalue;
  return static_cast<double>(
      (applied.values() / e - f.values()).cwiseAbs().maxCoeff());
}

}  // namespace

template <class Real>
double eigen_max_deviation(const BasicSamples<Real>& mode_samples, double beta,
                           double eigenvalue) {
  return max_deviation(mode_samples, riesz_apply(mode_samples, beta),
                       eigenvalue);
}

template <class Real>
double eigen_max_deviation(
    const BasicSamples<Real>& mode_samples,
    const std::type_identity_t<std::function<Real(Real)>>& symbol,
    double eigenvalue) {
  return max_deviation(
      mode_samples, apply_fourier_multiplier<Real>(mode_samples, symbol),
      eigenvalue);
}

#define LEVYSLAB_EIGENBOX_INSTANTIATE(Real)                                  \
  template EigenMode<Real> odd_mode<Real>(int, const Grid1D&, double);       \
  template EigenMode<Real> even_mode<Real>(int, const Grid1D&, double);      \
  template SamplePair<Real> degenerate_pair<Real>(int, const Grid1D&);       \
  template Parity boundary_member<Real>(const SamplePair<Real>&, int);       \
  template double eigen_residual<Real>(const BasicSamples<Real>&, double,    \
                                       double);                              \
  template double eigen_residual<Real>(                                      \
      const BasicSamples<Real>&, const std::function<Real(Real)>&, double);  \
  template double eigen_max_deviation<Real>(const BasicSamples<Real>&,       \
                                            double, double);                 \
  template double eigen_max_deviation<Real>(                                 \
      const BasicSamples<Real>&, const std::function<Real(Real)>&, double);

LEVYSLAB_EIGENBOX_INSTANTIATE(double)
LEVYSLAB_EIGENBOX_INSTANTIATE(long double)

}  // namespace levyslab
