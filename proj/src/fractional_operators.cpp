#include "levyslab/fractional_operators.hpp"

#include <vector>

#include <unsupported/Eigen/FFT>

namespace levyslab {

FractionalOrders::FractionalOrders(double alpha, double beta)
    : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("FractionalOrders: alpha must lie in (0, 1]");
  }
  if (!(beta > 1.0 && beta <= 2.0)) {
    throw DomainError("FractionalOrders: beta must lie in (1, 2]");
  }
}

namespace detail {

void check_caputo_args(double alpha, double x, double h) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("caputo_deriv: alpha must lie in (0, 1)");
  }
  if (!(x > 0.0)) throw DomainError("caputo_deriv: x must be positive");
  if (!(h > 0.0) || h > x / 8.0 * (1.0 + 1e-12)) {
    throw DomainError("caputo_deriv: step must satisfy 0 < h <= x/8");
  }
}

double forward_power_difference(double j, double p) {
  if (j == 0.0) return 1.0;
  return std::pow(j, p) * std::expm1(p * std::log1p(1.0 / j));
}

double central_power_second_difference(double m, double p) {
  if (m < 16.0) {
    return std::pow(m + 1.0, p) - 2.0 * std::pow(m, p) + std::pow(m - 1.0, p);
  }
  // 2 m^p sum_{k even >= 2} C(p, k) m^-k
  const double inv = 1.0 / m;
  double binom = 1.0;
  double power = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    binom *= (p - k + 1.0) / k;
    power *= inv;
    if (k % 2 == 1) continue;
    const double term = binom * power;
    sum += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
  }
  return 2.0 * std::pow(m, p) * sum;
}

}  // namespace detail

double rl_integral_last(const Eigen::Ref<const Eigen::VectorXd>& samples,
                        double mu, double h) {
  if (!(mu > 0.0)) throw DomainError("rl_integral_last: order must be positive");
  const Eigen::Index n = samples.size() - 1;
  if (n <= 0) return 0.0;
  const double nn = static_cast<double>(n);
  const double w0 = std::pow(nn, mu) *
                    ((nn - 1.0) * std::expm1(mu * std::log1p(-1.0 / nn)) + mu);
  double acc = w0 * samples[0] + samples[n];
  for (Eigen::Index j = 1; j < n; ++j) {
    acc += detail::central_power_second_difference(static_cast<double>(n - j),
                                                   mu + 1.0) *
           samples[j];
  }
  return std::pow(h, mu) / gamma_fn(mu + 2.0) * acc;
}

double rl_deriv(const std::function<double(double)>& f, double alpha, double x,
                double h) {
  if (!((alpha > 0.0 && alpha < 1.0) || (alpha > 1.0 && alpha < 2.0))) {
    throw DomainError("rl_deriv: alpha must lie in (0,1) or (1,2)");
  }
  if (!(x > 0.0)) throw DomainError("rl_deriv: x must be positive");
  if (!(h > 0.0) || h > x / 8.0 * (1.0 + 1e-12)) {
    throw DomainError("rl_deriv: step must satisfy 0 < h <= x/8");
  }
  const int order = alpha < 1.0 ? 1 : 2;
  const double mu = order - alpha;
  const auto steps = static_cast<Eigen::Index>(std::llround(x / h));
  const double step = x / static_cast<double>(steps);
  Eigen::VectorXd samples(steps + 1);
  for (Eigen::Index i = 0; i <= steps; ++i) {
    samples[i] = f(step * static_cast<double>(i));
  }
  auto integral_at = [&](Eigen::Index back) {
    return rl_integral_last(samples.head(steps + 1 - back), mu, step);
  };
  if (order == 1) {
    return (3.0 * integral_at(0) - 4.0 * integral_at(1) + integral_at(2)) /
           (2.0 * step);
  }
  return (2.0 * integral_at(0) - 5.0 * integral_at(1) + 4.0 * integral_at(2) -
          integral_at(3)) /
         (step * step);
}

Eigen::VectorXd gl_deriv(const Eigen::Ref<const Eigen::VectorXd>& samples,
                         double alpha, double h) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("gl_deriv: alpha must lie in (0, 2)");
  }
  if (!(h > 0.0)) throw DomainError("gl_deriv: step must be positive");
  const Eigen::Index n = samples.size();
  Eigen::VectorXd weights(n);
  if (n > 0) weights[0] = 1.0;
  for (Eigen::Index j = 1; j < n; ++j) {
    weights[j] = weights[j - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(j));
  }
  const double scale = std::pow(h, -alpha);
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j <= i; ++j) acc += weights[j] * samples[i - j];
    out[i] = scale * acc;
  }
  return out;
}

namespace {

// Eigen's kissfft computes its twiddle factors in double whatever the scalar
// type, which caps a long double transform at double accuracy. This variant
// recomputes the cached twiddles in Real before use.
template <class Real>
class PreciseKissFft : public Eigen::internal::kissfft_impl<Real> {
 public:
  void prepare(int nfft) {
    for (bool inverse : {false, true}) {
      auto& plan = this->get_plan(nfft, inverse);
      const Real sign = inverse ? Real(1) : Real(-1);
      for (int i = 0; i < nfft; ++i) {
        // exp(sign * 2 pi i t), t = i / nfft
        const Real t = Real(2) * Real(i) / Real(nfft);
        plan.m_twiddles[static_cast<std::size_t>(i)] =
            std::complex<Real>(sin_pi(t + Real(0.5)), sign * sin_pi(t));
      }
    }
  }
};

}  // namespace

template <class Real>
BasicSamples<Real> apply_fourier_multiplier(
    const BasicSamples<Real>& f,
    const std::type_identity_t<std::function<Real(Real)>>& symbol) {
  using C = std::complex<Real>;
  const Grid1D& grid = f.grid();
  const std::size_t n = grid.n_points();
  std::vector<C> samples(f.values().data(), f.values().data() + n);
  std::vector<C> spectrum;
  Eigen::FFT<Real, PreciseKissFft<Real>> fft;
  fft.impl().prepare(static_cast<int>(n));
  fft.fwd(spectrum, samples);
  for (std::size_t b = 0; b < n; ++b) {
    spectrum[b] *= symbol(fourier_wavenumber<Real>(grid, b));
  }
  std::vector<C> back;
  fft.inv(back, spectrum);
  typename BasicSamples<Real>::Vector out(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) out[static_cast<Eigen::Index>(j)] = back[j];
  return BasicSamples<Real>(grid, std::move(out));
}

template <class Real>
BasicSamples<Real> riesz_apply(const BasicSamples<Real>& f, double beta) {
  if (!(beta > 1.0 && beta <= 2.0)) {
    throw DomainError("riesz_apply: beta must lie in (1, 2]");
  }
  const Real b = beta;
  return apply_fourier_multiplier<Real>(f, [b](Real k) {
    using std::abs;
    using std::pow;
    return k == Real(0) ? Real(0) : pow(abs(k), b);
  });
}

template ComplexSamples apply_fourier_multiplier(
    const ComplexSamples&, const std::function<double(double)>&);
template BasicSamples<long double> apply_fourier_multiplier(
    const BasicSamples<long double>&,
    const std::function<long double(long double)>&);
template ComplexSamples riesz_apply(const ComplexSamples&, double);
template BasicSamples<long double> riesz_apply(const BasicSamples<long double>&,
                                               double);

}  // namespace levyslab
