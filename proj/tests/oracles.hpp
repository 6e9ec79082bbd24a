#pragma once

// Independent reference implementations used only by the tests.

#include <complex>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

/// Gamma in 50-digit arithmetic.
inline double gamma50(double x) {
  return static_cast<double>(boost::math::tgamma(big(x)));
}

/// Brute-force power series of E_{a,b}(z) in 50-digit arithmetic. Terms are
/// summed until they drop below 1e-45 relative to the largest term seen.
inline std::complex<double> ml_series50(double a, double b,
                                        std::complex<double> z) {
  const big zr = z.real();
  const big zi = z.imag();
  big pr = 1;
  big pi = 0;
  big sr = 0;
  big si = 0;
  big peak = 0;
  const big ba = a;
  const big bb = b;
  for (int k = 0; k < 5000; ++k) {
    const big inv_gamma = 1 / boost::math::tgamma(ba * k + bb);
    const big tr = pr * inv_gamma;
    const big ti = pi * inv_gamma;
    sr += tr;
    si += ti;
    const big mag = abs(tr) + abs(ti);
    if (mag > peak) peak = mag;
    if (k > 8 && mag < peak * big("1e-45") && mag < big("1e-45")) break;
    const big nr = pr * zr - pi * zi;
    const big ni = pr * zi + pi * zr;
    pr = nr;
    pi = ni;
  }
  return {static_cast<double>(sr), static_cast<double>(si)};
}

inline double ml_series50_real(double a, double b, double x) {
  return ml_series50(a, b, {x, 0.0}).real();
}

/// Composite trapezoid rule on [lo, hi] with n intervals.
template <class F>
double trapezoid(F&& f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double acc = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < n; ++i) acc += f(lo + i * h);
  return acc * h;
}

}  // namespace oracle
