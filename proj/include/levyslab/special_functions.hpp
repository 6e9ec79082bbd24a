#pragma once

#include <complex>
#include <memory>

#include "levyslab/errors.hpp"

namespace levyslab {

/// Gamma function for real arguments.
///
/// Lanczos approximation (g = 7, nine coefficients) for x >= 0.5 and the
/// reflection formula below that. Throws PoleError at 0, -1, -2, ...
double gamma_fn(double x);

/// log|Gamma(x)|, same approximation as gamma_fn but without overflow.
double log_abs_gamma(double x);

/// 1 / Gamma(x); exactly zero at the poles of Gamma.
double reciprocal_gamma(double x);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);
long double sin_pi(long double x);

/// Parameters (gamma, delta) of the two-parameter Mittag-Leffler function
/// E_{gamma,delta}(z) = sum_k z^k / Gamma(gamma k + delta).
class MLParams {
 public:
  MLParams(double gamma_order, double delta_order);

  double gamma_order() const noexcept { return gamma_; }
  double delta_order() const noexcept { return delta_; }

 private:
  double gamma_;
  double delta_;
};

enum class Regime { series, asymptotic };

const char* to_string(Regime regime) noexcept;

struct EvalResult {
  std::complex<double> value;
  double est_abs_error = 0.0;
  Regime regime = Regime::series;
};

/// Raised by mittag_leffler when no regime reaches the requested accuracy.
/// The best available result is attached.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, EvalResult best)
      : Error(what), best_(best) {}

  const EvalResult& best_effort() const noexcept { return best_; }

 private:
  EvalResult best_;
};

struct MLOptions {
  /// Accepted error is tolerance * max(1, |E|).
  double tolerance = 1e-10;
};

/// Two-parameter Mittag-Leffler function for complex argument.
///
/// The evaluator tries, in order: the power series in double precision,
/// the power series in extended precision, and the large-|z| expansion
/// (pole contributions plus the optimally truncated inverse-power series).
/// The first candidate accurate to `tolerance` relative to its value is
/// returned; failing that, the candidate with the smallest error estimate,
/// if that estimate is within tolerance * max(1, |E|). Otherwise throws
/// NonConvergence carrying the best candidate.
EvalResult mittag_leffler(const MLParams& p, std::complex<double> z,
                          const MLOptions& opts = {});

/// Mittag-Leffler function with fixed parameters, for repeated evaluation.
/// Caches log Gamma(gamma k + delta) for the series; the extended-precision
/// table is built on first use. Copies share the (immutable) tables, and
/// evaluation is safe from concurrent callers.
class MittagLeffler {
 public:
  explicit MittagLeffler(const MLParams& p, const MLOptions& opts = {});

  /// Same contract and result as mittag_leffler(params(), z, options()).
  EvalResult operator()(std::complex<double> z) const;
  double real(double x) const { return (*this)({x, 0.0}).value.real(); }

  const MLParams& params() const noexcept { return params_; }
  const MLOptions& options() const noexcept { return opts_; }

 private:
  struct Tables;
  MLParams params_;
  MLOptions opts_;
  std::shared_ptr<Tables> tables_;
};

/// Real-valued convenience wrapper, E_{gamma,delta}(x) for real x.
double mittag_leffler_real(const MLParams& p, double x,
                           const MLOptions& opts = {});

/// Truncated inverse-power expansion on the negative real axis,
///   E(-x) ~ -sum_{n=1}^{n_terms} (-x)^{-n} / Gamma(delta - gamma n).
/// est_abs_error bounds the first omitted term by
/// Gamma(1 + gamma (n+1) - delta) x^{-(n+1)} / pi.
/// Throws DomainError for x <= 1 or n_terms < 1.
EvalResult ml_asymptotic(const MLParams& p, double x, int n_terms);

// The individual regimes, exposed for diagnostics and tests.

/// Power series summed in double precision with compensated summation.
EvalResult ml_series(const MLParams& p, std::complex<double> z);

/// Power series summed in 113-bit (or, without libquadmath, 64-bit)
/// floating point.
EvalResult ml_series_extended(const MLParams& p, std::complex<double> z);

/// Large-|z| expansion for complex z, |z| > 1.
EvalResult ml_asymptotic_complex(const MLParams& p, std::complex<double> z);

}  // namespace levyslab
