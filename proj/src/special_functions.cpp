#include "levyslab/special_functions.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <vector>

#if defined(LEVYSLAB_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace levyslab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos sum A_g(x) for x >= 0.5, written for argument x - 1.
double lanczos_sum(double xm1) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (xm1 + static_cast<double>(i));
  }
  return a;
}

double log_gamma_lanczos(double x) {
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm1));
}

// Extended-precision arithmetic used by the series evaluator.
template <class Real>
struct Arith;

template <>
struct Arith<double> {
  static constexpr double eps = DBL_EPSILON;
  static constexpr double max = DBL_MAX;
  static double log_gamma(double x) { return log_abs_gamma(x); }
  static double exp(double x) { return std::exp(x); }
  static double log(double x) { return std::log(x); }
  static double sqrt(double x) { return std::sqrt(x); }
  static double abs(double x) { return std::fabs(x); }
};

// log Gamma(x) for x > 0 by upward shift and the Stirling series; enough
// terms for 113-bit accuracy once x >= 32.
template <class Real, class Ops>
Real stirling_log_gamma(Real x) {
  static constexpr std::array<std::array<double, 2>, 15> bernoulli = {{
      {1.0, 6.0},
      {-1.0, 30.0},
      {1.0, 42.0},
      {-1.0, 30.0},
      {5.0, 66.0},
      {-691.0, 2730.0},
      {7.0, 6.0},
      {-3617.0, 510.0},
      {43867.0, 798.0},
      {-174611.0, 330.0},
      {854513.0, 138.0},
      {-236364091.0, 2730.0},
      {8553103.0, 6.0},
      {-23749461029.0, 870.0},
      {8615841276005.0, 14322.0},
  }};
  Real shift_log = 0;
  Real prod = 1;
  while (x < Real(32)) {
    prod *= x;
    x += Real(1);
    if (prod > Real(1e300)) {
      shift_log += Ops::log(prod);
      prod = 1;
    }
  }
  shift_log += Ops::log(prod);
  const Real inv = Real(1) / x;
  const Real inv2 = inv * inv;
  Real power = inv;
  Real corr = 0;
  for (std::size_t n = 1; n <= bernoulli.size(); ++n) {
    const Real b2n = Real(bernoulli[n - 1][0]) / Real(bernoulli[n - 1][1]);
    corr += b2n / (Real(2 * n) * Real(2 * n - 1)) * power;
    power *= inv2;
  }
  const Real half_log_2pi = Ops::log(Real(2) * Ops::pi()) / Real(2);
  return (x - Real(0.5)) * Ops::log(x) - x + half_log_2pi + corr - shift_log;
}

#if defined(LEVYSLAB_HAVE_QUADMATH)
using Extended = __float128;

template <>
struct Arith<__float128> {
  static constexpr __float128 eps = FLT128_EPSILON;
  static constexpr __float128 max = FLT128_MAX;
  static __float128 pi() { return M_PIq; }
  static __float128 log_gamma(__float128 x) {
    return stirling_log_gamma<__float128, Arith<__float128>>(x);
  }
  static __float128 exp(__float128 x) { return expq(x); }
  static __float128 log(__float128 x) { return logq(x); }
  static __float128 sqrt(__float128 x) { return sqrtq(x); }
  static __float128 abs(__float128 x) { return fabsq(x); }
};
#else
using Extended = long double;

template <>
struct Arith<long double> {
  static constexpr long double eps = LDBL_EPSILON;
  static constexpr long double max = LDBL_MAX;
  static long double pi() { return std::numbers::pi_v<long double>; }
  static long double log_gamma(long double x) {
    return stirling_log_gamma<long double, Arith<long double>>(x);
  }
  static long double exp(long double x) { return std::exp(x); }
  static long double log(long double x) { return std::log(x); }
  static long double sqrt(long double x) { return std::sqrt(x); }
  static long double abs(long double x) { return std::fabs(x); }
};
#endif

// Neumaier compensated accumulator.
template <class Real>
struct CompensatedSum {
  Real sum = 0;
  Real comp = 0;
  void add(Real v) {
    const Real t = sum + v;
    if (Arith<Real>::abs(sum) >= Arith<Real>::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  Real value() const { return sum + comp; }
};

// log Gamma(a k + b) and 1 / Gamma(a k + b) for the series coefficients.
template <class Real>
struct SeriesCoefficients {
  std::vector<Real> log_gamma;
  std::vector<Real> reciprocal;
};

template <class Real>
SeriesCoefficients<Real> series_coefficients(double a, double b, std::size_t n) {
  SeriesCoefficients<Real> out;
  out.log_gamma.resize(n);
  out.reciprocal.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real lg = Arith<Real>::log_gamma(Real(a) * Real(k) + Real(b));
    out.log_gamma[k] = lg;
    out.reciprocal[k] = Arith<Real>::exp(-lg);
  }
  return out;
}

// Power series with terms z^k / Gamma(a k + b). Coefficients for k below the
// table size come from `table` (may be null).
template <class Real>
EvalResult sum_series(double gamma_order, double delta_order,
                      std::complex<double> z,
                      const SeriesCoefficients<Real>* table) {
  using A = Arith<Real>;
  const Real a = gamma_order;
  const Real b = delta_order;
  if (z == 0.0) {
    return {reciprocal_gamma(delta_order), 0.0, Regime::series};
  }
  const Real zr = z.real();
  const Real zi = z.imag();
  const Real r = A::sqrt(zr * zr + zi * zi);
  const Real log_r = A::log(r);
  const std::size_t tabulated = table ? table->log_gamma.size() : 0;

  // Error bookkeeping only needs a few digits and stays in double.
  const double eps = static_cast<double>(A::eps);
  const double log_r_d = static_cast<double>(log_r);
  const double a_d = gamma_order;
  const double b_d = delta_order;

  CompensatedSum<Real> sum_re;
  CompensatedSum<Real> sum_im;
  Real pow_re = 1;  // z^k
  Real pow_im = 0;
  Real pow_abs = 1;  // |z|^k
  double abs_sum = 0;
  double weighted = 0;
  double prev_mag = -1;
  double tail = 0;
  bool converged = false;

  constexpr int kMaxTerms = 100000;
  for (int k = 0; k < kMaxTerms; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const Real lg = uk < tabulated ? table->log_gamma[uk]
                                   : A::log_gamma(a * Real(k) + b);
    const Real rg = uk < tabulated ? table->reciprocal[uk] : A::exp(-lg);
    Real mag = pow_abs * rg;
    Real term_re = pow_re * rg;
    Real term_im = pow_im * rg;
    if (!(pow_abs < A::max) || !(rg > Real(0))) {
      // Out of range for the running power: rebuild the term from logs.
      mag = A::exp(Real(k) * log_r - lg);
      term_re = mag * (pow_re / pow_abs);
      term_im = mag * (pow_im / pow_abs);
      if (!(pow_abs < A::max)) break;
    }
    sum_re.add(term_re);
    sum_im.add(term_im);
    const double mag_d = static_cast<double>(mag);
    abs_sum += mag_d;
    weighted += mag_d * (std::fabs(k * log_r_d) +
                         std::fabs(static_cast<double>(lg)) + 2.0 * k + 4.0);

    if (k >= 1 && a_d * k + b_d >= 2.0 && mag_d < prev_mag) {
      const double rho = mag_d / prev_mag;
      tail = mag_d * rho / (1.0 - rho);
      // |sum| >= max(|re|, |im|)
      const double cur =
          std::max(std::fabs(static_cast<double>(sum_re.value())),
                   std::fabs(static_cast<double>(sum_im.value())));
      const double floor_scale = std::max(cur, eps * abs_sum);
      if (mag_d == 0.0 || tail <= 1e-3 * eps * floor_scale) {
        converged = true;
        break;
      }
    }
    prev_mag = mag_d;

    const Real next_re = pow_re * zr - pow_im * zi;
    const Real next_im = pow_re * zi + pow_im * zr;
    pow_re = next_re;
    pow_im = next_im;
    pow_abs *= r;
  }

  const std::complex<double> value(static_cast<double>(sum_re.value()),
                                   static_cast<double>(sum_im.value()));
  double est = eps * weighted + tail + 4.0 * eps * std::abs(value);
  if (eps < DBL_EPSILON) {
    est += DBL_EPSILON * std::abs(value);
  }
  if (!converged || !std::isfinite(est) || !std::isfinite(std::abs(value))) {
    est = kInf;
  }
  return {value, est, Regime::series};
}

}  // namespace

namespace {

template <class Real>
Real sin_pi_impl(Real x) {
  Real r = std::remainder(x, Real(2));  // r in [-1, 1]
  if (r == std::floor(r)) return Real(0);
  if (r > Real(0.5)) {
    r = Real(1) - r;
  } else if (r < Real(-0.5)) {
    r = Real(-1) - r;
  }
  return std::sin(std::numbers::pi_v<Real> * r);
}

}  // namespace

double sin_pi(double x) { return sin_pi_impl(x); }

long double sin_pi(long double x) { return sin_pi_impl(x); }

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_pole(x)) {
    throw PoleError("gamma_fn: pole at non-positive integer " +
                    std::to_string(x));
  }
  if (x < 0.5) {
    return kPi / (sin_pi(x) * gamma_fn(1.0 - x));
  }
  if (x > 171.7) return kInf;
  // Factorials are exact in double up to 22!.
  if (x <= 23.0 && x == std::floor(x)) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
    return f;
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  // Split the power so that t^(x-1/2) does not overflow before e^-t is applied.
  const double half_pow = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * kPi) * half_pow * (half_pow * std::exp(-t)) *
         lanczos_sum(xm1);
}

double log_abs_gamma(double x) {
  if (is_pole(x)) return kInf;
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    return std::log(kPi) - std::log(std::fabs(sin_pi(x))) -
           log_abs_gamma(1.0 - x);
  }
  return log_gamma_lanczos(x);
}

double reciprocal_gamma(double x) {
  if (is_pole(x)) return 0.0;
  if (x >= 0.5) {
    if (x < 170.0) return 1.0 / gamma_fn(x);
    return std::exp(-log_gamma_lanczos(x));
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  const double s = sin_pi(x);
  if (1.0 - x < 170.0) return s * gamma_fn(1.0 - x) / kPi;
  return std::copysign(
      std::exp(std::log(std::fabs(s)) + log_gamma_lanczos(1.0 - x) -
               std::log(kPi)),
      s);
}

MLParams::MLParams(double gamma_order, double delta_order)
    : gamma_(gamma_order), delta_(delta_order) {
  if (!(gamma_order > 0.0) || !(delta_order > 0.0) ||
      !std::isfinite(gamma_order) || !std::isfinite(delta_order)) {
    throw DomainError("MLParams: both orders must be positive and finite");
  }
}

const char* to_string(Regime regime) noexcept {
  return regime == Regime::series ? "series" : "asymptotic";
}

EvalResult ml_series(const MLParams& p, std::complex<double> z) {
  return sum_series<double>(p.gamma_order(), p.delta_order(), z, nullptr);
}

EvalResult ml_series_extended(const MLParams& p, std::complex<double> z) {
  return sum_series<Extended>(p.gamma_order(), p.delta_order(), z, nullptr);
}

EvalResult ml_asymptotic_complex(const MLParams& p, std::complex<double> z) {
  const double a = p.gamma_order();
  const double b = p.delta_order();
  const double r = std::abs(z);
  if (!(r > 1.0)) {
    throw DomainError("ml_asymptotic_complex: requires |z| > 1");
  }
  const double theta = std::arg(z);
  const double log_r = std::log(r);
  const double big_x = std::exp(log_r / a);  // |z|^(1/a)
  const double log_x = log_r / a;

  // Residues of e^s s^(a-b) / (s^a - z) at the poles s^a = z that lie on
  // the principal sheet |arg s| < pi.  A pole exactly on the cut
  // contributes half its residue from each side.
  std::complex<double> pole_sum = 0.0;
  double pole_abs = 0.0;
  double cut_uncertainty = 0.0;
  const int j_max = static_cast<int>(std::ceil(a / 2.0)) + 1;
  for (int j = -j_max; j <= j_max; ++j) {
    const double psi = theta + 2.0 * kPi * j;
    const double phi = psi / a;
    const double log_mag = -std::log(a) + (1.0 - b) * log_x + big_x * std::cos(phi);
    const double edge = std::fabs(std::fabs(psi) - a * kPi);
    double weight = 0.0;
    if (edge <= 1e-12 * a * kPi) {
      weight = 0.5;
    } else if (std::fabs(psi) < a * kPi) {
      weight = 1.0;
    } else if (std::fabs(phi) < kPi + 1.0) {
      cut_uncertainty = std::max(cut_uncertainty, std::exp(log_mag));
      continue;
    } else {
      continue;
    }
    const double mag = weight * std::exp(log_mag);
    const double phase = big_x * std::sin(phi) + (1.0 - b) * phi;
    pole_sum += std::polar(mag, phase);
    pole_abs += mag * (big_x + 4.0);
  }

  // Inverse-power series, truncated at its smallest term.
  std::complex<double> alg_sum = 0.0;
  double alg_abs = 0.0;
  double trunc = 0.0;
  double prev_env = kInf;
  constexpr int kMaxTerms = 2000;
  const int k_start = static_cast<int>(std::ceil((1.0 + b) / a));
  for (int k = 1;; ++k) {
    const double x = b - a * k;
    double env = 0.0;
    double log_env = 0.0;
    double coef = 0.0;  // 1/Gamma(x) * |z|^-k
    if (x > 0.0) {
      log_env = -log_abs_gamma(x) - k * log_r;
      env = std::exp(log_env);
      coef = env;
    } else {
      log_env = log_abs_gamma(1.0 - x) - std::log(kPi) - k * log_r;
      env = std::exp(log_env);
      coef = sin_pi(x) * env;
    }
    if (k > k_start && env > prev_env) {
      trunc = env;
      break;
    }
    if (k >= kMaxTerms) {
      trunc = env;
      break;
    }
    const double phase = -static_cast<double>(k) * theta;
    alg_sum += std::polar(coef, phase);
    alg_abs += std::fabs(coef) * (k + std::fabs(log_env) + 4.0);
    if (k >= k_start &&
        env <= 1e-3 * DBL_EPSILON * (std::abs(pole_sum - alg_sum) + 1e-300)) {
      trunc = env;
      break;
    }
    prev_env = env;
  }

  const std::complex<double> value = pole_sum - alg_sum;
  double est = trunc + cut_uncertainty + DBL_EPSILON * (pole_abs + alg_abs) +
               2.0 * DBL_EPSILON * std::abs(value);
  if (!std::isfinite(est) || !std::isfinite(std::abs(value))) est = kInf;
  return {value, est, Regime::asymptotic};
}

namespace {

constexpr double kDoubleGrowthLimit = 40.0;
constexpr double kExtendedGrowthLimit = 120.0;

// Number of series terms that can matter once |z|^(1/a) <= limit.
std::size_t table_size(double a, double limit) {
  return static_cast<std::size_t>(std::ceil(3.0 * limit / a)) + 64;
}

template <class SeriesD, class SeriesX>
EvalResult select_regime(const MLParams& p, std::complex<double> z,
                         const MLOptions& opts, SeriesD&& series_double,
                         SeriesX&& series_extended) {
  if (z == 0.0) {
    return {reciprocal_gamma(p.delta_order()), 0.0, Regime::series};
  }
  const double r = std::abs(z);
  // Series terms peak near exp(|z|^(1/gamma)); this sets the cancellation
  // each precision can absorb.
  const double growth = std::pow(r, 1.0 / p.gamma_order());

  // First pass: a candidate that is accurate relative to its own value.
  // Otherwise the smallest error estimate wins, provided it meets the
  // tolerance relative to max(1, |E|).
  EvalResult best{std::complex<double>(0.0, 0.0), kInf, Regime::series};
  bool have_best = false;
  auto relative_ok = [&](const EvalResult& res) {
    if (!have_best || res.est_abs_error < best.est_abs_error) {
      best = res;
      have_best = true;
    }
    return res.est_abs_error <= opts.tolerance * std::abs(res.value);
  };

  const bool real_axis = z.imag() == 0.0;
  auto finish = [real_axis](EvalResult res) {
    if (real_axis) res.value.imag(0.0);
    return res;
  };

  if (growth <= kDoubleGrowthLimit) {
    const EvalResult res = series_double(z);
    if (relative_ok(res)) return finish(res);
  }
  if (growth <= kExtendedGrowthLimit) {
    const EvalResult res = series_extended(z);
    if (relative_ok(res)) return finish(res);
  }
  if (r > 1.0) {
    const EvalResult res = ml_asymptotic_complex(p, z);
    if (relative_ok(res)) return finish(res);
  }
  if (have_best && best.est_abs_error <=
                       opts.tolerance * std::max(1.0, std::abs(best.value))) {
    return finish(best);
  }
  throw NonConvergence("mittag_leffler: no regime reached the tolerance", best);
}

}  // namespace

struct MittagLeffler::Tables {
  SeriesCoefficients<double> series_double;
  std::once_flag extended_once;
  SeriesCoefficients<Extended> series_extended;
};

MittagLeffler::MittagLeffler(const MLParams& p, const MLOptions& opts)
    : params_(p), opts_(opts), tables_(std::make_shared<Tables>()) {
  tables_->series_double = series_coefficients<double>(
      p.gamma_order(), p.delta_order(),
      table_size(p.gamma_order(), kDoubleGrowthLimit));
}

EvalResult MittagLeffler::operator()(std::complex<double> z) const {
  const double a = params_.gamma_order();
  const double b = params_.delta_order();
  return select_regime(params_, z, opts_, [&](std::complex<double> w) {
    return sum_series<double>(a, b, w, &tables_->series_double);
  }, [&](std::complex<double> w) {
    std::call_once(tables_->extended_once, [&] {
      tables_->series_extended = series_coefficients<Extended>(
          a, b, table_size(a, kExtendedGrowthLimit));
    });
    return sum_series<Extended>(a, b, w, &tables_->series_extended);
  });
}

EvalResult mittag_leffler(const MLParams& p, std::complex<double> z,
                          const MLOptions& opts) {
  return select_regime(
      p, z, opts, [&](std::complex<double> w) { return ml_series(p, w); },
      [&](std::complex<double> w) { return ml_series_extended(p, w); });
}

double mittag_leffler_real(const MLParams& p, double x, const MLOptions& opts) {
  return mittag_leffler(p, std::complex<double>(x, 0.0), opts).value.real();
}

EvalResult ml_asymptotic(const MLParams& p, double x, int n_terms) {
  if (!(x > 1.0)) {
    throw DomainError("ml_asymptotic: requires x > 1");
  }
  if (n_terms < 1) {
    throw DomainError("ml_asymptotic: requires n_terms >= 1");
  }
  const double g = p.gamma_order();
  const double d = p.delta_order();
  double sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    // -(-x)^{-n} = (-1)^{n+1} x^{-n}
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    sum += sign * std::pow(x, -n) * reciprocal_gamma(d - g * n);
  }
  const int next = n_terms + 1;
  const double arg = d - g * next;
  double bound = 0.0;
  if (arg > 0.0) {
    bound = std::pow(x, -next) * std::fabs(reciprocal_gamma(arg));
  } else {
    bound = std::exp(log_abs_gamma(1.0 - arg) - next * std::log(x)) / kPi;
  }
  return {std::complex<double>(sum, 0.0), bound, Regime::asymptotic};
}

}  // namespace levyslab
