#pragma once

#include <cmath>
#include <functional>

#include "levyslab/eigenbox.hpp"
#include "levyslab/fractional_operators.hpp"

namespace levyslab::cli {

/// The transverse operator used by `eig` and `verify`. With `fault` set the
/// symbol |k|^beta is replaced by |k|^(beta-1), a deliberate mutation the
/// eigen checks must catch.
struct TransverseOperator {
  double beta = 1.8;
  bool fault = false;

  using Samples = BasicSamples<long double>;

  std::function<long double(long double)> faulty_symbol() const {
    const long double p = beta - 1.0;
    return [p](long double k) { return k == 0 ? 0.0L : std::pow(std::fabs(k), p); };
  }

  Samples apply(const Samples& f) const {
    return fault ? apply_fourier_multiplier<long double>(f, faulty_symbol())
                 : riesz_apply(f, beta);
  }

  double residual(const Samples& f, double eigenvalue) const {
    return fault ? eigen_residual<long double>(f, faulty_symbol(), eigenvalue)
                 : eigen_residual(f, beta, eigenvalue);
  }

  double max_deviation(const Samples& f, double eigenvalue) const {
    return fault ? eigen_max_deviation<long double>(f, faulty_symbol(), eigenvalue)
                 : eigen_max_deviation(f, beta, eigenvalue);
  }
};

}  // namespace levyslab::cli
