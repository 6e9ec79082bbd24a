#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <type_traits>

#include <Eigen/Dense>

#include "levyslab/errors.hpp"
#include "levyslab/grid.hpp"
#include "levyslab/special_functions.hpp"

namespace levyslab {

/// Orders of the model: alpha in time, beta in space, and the effective
/// z-order gamma = beta - 1 (always derived, never set).
///
/// alpha is accepted in (0, 1] and beta in (1, 2]; the closed upper ends
/// are the integer-order limits.
class FractionalOrders {
 public:
  FractionalOrders(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return beta_ - 1.0; }

 private:
  double alpha_;
  double beta_;
};

namespace detail {

void check_caputo_args(double alpha, double x, double h);

/// (j+1)^p - j^p without cancellation for large j.
double forward_power_difference(double j, double p);

/// (m+1)^p - 2 m^p + (m-1)^p, m >= 1, without cancellation for large m.
double central_power_second_difference(double m, double p);

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

}  // namespace detail

/// L1-scheme Caputo derivative of order alpha in (0,1) at every node of a
/// uniform grid x_n = n h, n = 0..N-1, starting at the lower limit 0.
/// Node 0 gets 0.
template <class Derived>
detail::Vec<typename Derived::Scalar> caputo_l1(
    const Eigen::MatrixBase<Derived>& samples, double alpha, double h) {
  using Scalar = typename Derived::Scalar;
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("caputo_l1: alpha must lie in (0, 1)");
  }
  if (!(h > 0.0)) throw DomainError("caputo_l1: step must be positive");
  const Eigen::Index n = samples.size();
  detail::Vec<Scalar> out = detail::Vec<Scalar>::Zero(n);
  if (n < 2) return out;

  Eigen::VectorXd weights(n - 1);
  for (Eigen::Index j = 0; j < n - 1; ++j) {
    weights[j] = detail::forward_power_difference(static_cast<double>(j), 1.0 - alpha);
  }
  detail::Vec<Scalar> diffs = samples.tail(n - 1) - samples.head(n - 1);
  const double scale = std::pow(h, -alpha) / gamma_fn(2.0 - alpha);
  for (Eigen::Index i = 1; i < n; ++i) {
    Scalar acc(0);
    for (Eigen::Index j = 0; j < i; ++j) acc += weights[j] * diffs[i - 1 - j];
    out[i] = scale * acc;
  }
  return out;
}

/// L1-scheme Caputo derivative at the last node only, O(N).
template <class Derived>
typename Derived::Scalar caputo_l1_last(const Eigen::MatrixBase<Derived>& samples,
                                        double alpha, double h) {
  using Scalar = typename Derived::Scalar;
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("caputo_l1_last: alpha must lie in (0, 1)");
  }
  const Eigen::Index n = samples.size();
  if (n < 2) return Scalar(0);
  Scalar acc(0);
  for (Eigen::Index j = 0; j < n - 1; ++j) {
    const double w = detail::forward_power_difference(static_cast<double>(j), 1.0 - alpha);
    acc += w * (samples[n - 1 - j] - samples[n - 2 - j]);
  }
  return std::pow(h, -alpha) / gamma_fn(2.0 - alpha) * acc;
}

/// Caputo derivative (1/Gamma(1-alpha)) int_0^x f'(y) (x-y)^-alpha dy by the
/// L1 scheme. The step is adjusted to x / round(x / h).
/// f may return double or std::complex<double>.
template <class F>
auto caputo_deriv(F&& f, double alpha, double x, double h) {
  using Scalar = std::decay_t<std::invoke_result_t<F&, double>>;
  detail::check_caputo_args(alpha, x, h);
  const auto steps = static_cast<Eigen::Index>(std::llround(x / h));
  const double step = x / static_cast<double>(steps);
  detail::Vec<Scalar> samples(steps + 1);
  for (Eigen::Index i = 0; i <= steps; ++i) {
    samples[i] = f(step * static_cast<double>(i));
  }
  return caputo_l1_last(samples, alpha, step);
}

/// Riemann-Liouville fractional integral of order mu > 0 at the last node of
/// a uniform grid from 0, product trapezoidal rule (exact for piecewise
/// linear f).
double rl_integral_last(const Eigen::Ref<const Eigen::VectorXd>& samples,
                        double mu, double h);

/// Riemann-Liouville derivative d^n/dx^n I^(n-alpha) f at x, n = ceil(alpha),
/// alpha in (0,1) or (1,2). The integral is discretized by the product
/// trapezoidal rule and differentiated by second-order backward differences.
double rl_deriv(const std::function<double(double)>& f, double alpha, double x,
                double h);

/// Grunwald-Letnikov differences h^-alpha sum_j (-1)^j C(alpha, j) f(x_i - j h)
/// at every node of the sampled grid (lower limit at node 0).
Eigen::VectorXd gl_deriv(const Eigen::Ref<const Eigen::VectorXd>& samples,
                         double alpha, double h);

/// Fourier wavenumber k_n = pi n / L of DFT bin `bin`, with the symmetric
/// ordering n in [-N/2, N/2 - 1].
template <class Real = double>
Real fourier_wavenumber(const Grid1D& grid, std::size_t bin) {
  const auto n = static_cast<long long>(grid.n_points());
  auto idx = static_cast<long long>(bin);
  if (idx >= n / 2) idx -= n;
  return std::numbers::pi_v<Real> * static_cast<Real>(idx) /
         static_cast<Real>(grid.half_width());
}

/// Multiplies each Fourier mode of f by symbol(k_n): forward DFT
/// (unnormalized), multiply, inverse DFT (scaled by 1/N). The transform runs
/// in the precision of the samples; instantiated for double and long double.
template <class Real>
BasicSamples<Real> apply_fourier_multiplier(
    const BasicSamples<Real>& f,
    const std::type_identity_t<std::function<Real(Real)>>& symbol);

/// Riesz fractional Laplacian on the 2L-periodic extension, Fourier symbol
/// |k|^beta. Positive operator: sin(m pi r / L) has eigenvalue (m pi / L)^beta.
/// beta must lie in (1, 2].
template <class Real>
BasicSamples<Real> riesz_apply(const BasicSamples<Real>& f, double beta);

extern template ComplexSamples apply_fourier_multiplier(
    const ComplexSamples&, const std::function<double(double)>&);
extern template BasicSamples<long double> apply_fourier_multiplier(
    const BasicSamples<long double>&,
    const std::function<long double(long double)>&);
extern template ComplexSamples riesz_apply(const ComplexSamples&, double);
extern template BasicSamples<long double> riesz_apply(
    const BasicSamples<long double>&, double);

}  // namespace levyslab
