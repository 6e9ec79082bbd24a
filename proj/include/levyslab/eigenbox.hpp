#pragma once

#include <functional>
#include <type_traits>
#include <utility>

#include "levyslab/grid.hpp"

namespace levyslab {

enum class Parity { odd, even, shifted_cos, shifted_sin };

const char* to_string(Parity parity) noexcept;

/// Analytic eigenpair of the fractional Hamiltonian in the well [-L, L].
/// The eigenvalue always comes from the closed form; FFT only verifies it.
/// Samples are stored with real type Real (double or long double).
template <class Real = double>
struct EigenMode {
  int m = 0;
  Parity parity = Parity::odd;
  double eigenvalue = 0.0;
  BasicSamples<Real> samples;
};

template <class Real = double>
using SamplePair = std::pair<BasicSamples<Real>, BasicSamples<Real>>;

/// (m pi / L)^beta
double odd_eigenvalue(int m, double half_width, double beta);

/// ((2m + 1) pi / (2L))^beta
double even_eigenvalue(int m, double half_width, double beta);

/// Psi_m(r) = sin(m pi r / L) / sqrt(L), m >= 1.
template <class Real = double>
EigenMode<Real> odd_mode(int m, const Grid1D& grid, double beta);

/// Psi_{2m+1}(r) = cos((2m+1) pi r / (2L)) / sqrt(L), m >= 0.
/// Not 2L-periodic, so the FFT operator does not reproduce it.
template <class Real = double>
EigenMode<Real> even_mode(int m, const Grid1D& grid, double beta);

/// Phase-shifted pair cos(m pi (2r + L) / (2L)) / sqrt(L) and
/// sin(m pi (2r + L) / (2L)) / sqrt(L), both with eigenvalue (m pi / L)^beta.
template <class Real = double>
SamplePair<Real> degenerate_pair(int m, const Grid1D& grid);

/// Which member select_by_boundary picks. Throws SelectionError if neither
/// (or both) vanish at the walls.
template <class Real>
Parity boundary_member(const SamplePair<Real>& pair, int m);

/// The member of the pair that vanishes at the walls r = +-L: the sine member
/// for even m, the cosine member for odd m.
template <class Real>
const BasicSamples<Real>& select_by_boundary(const SamplePair<Real>& pair,
                                             int m) {
  return boundary_member(pair, m) == Parity::shifted_cos ? pair.first
                                                         : pair.second;
}

/// ||H f - e f||_2 / ||f||_2 with H applied spectrally in the precision of
/// the samples. Throws ZeroFunction if ||f|| = 0.
template <class Real>
double eigen_residual(const BasicSamples<Real>& mode_samples, double beta,
                      double eigenvalue);

/// Same, with H replaced by an arbitrary Fourier symbol.
template <class Real>
double eigen_residual(
    const BasicSamples<Real>& mode_samples,
    const std::type_identity_t<std::function<Real(Real)>>& symbol,
    double eigenvalue);

/// max_j |(H f)_j / e - f_j|, the pointwise form of the eigen-relation.
template <class Real>
double eigen_max_deviation(const BasicSamples<Real>& mode_samples, double beta,
                           double eigenvalue);

template <class Real>
double eigen_max_deviation(
    const BasicSamples<Real>& mode_samples,
    const std::type_identity_t<std::function<Real(Real)>>& symbol,
    double eigenvalue);

#define LEVYSLAB_EIGENBOX_EXTERN(Real)                                        \
  extern template EigenMode<Real> odd_mode<Real>(int, const Grid1D&, double); \
  extern template EigenMode<Real> even_mode<Real>(int, const Grid1D&,         \
                                                  double);                    \
  extern template SamplePair<Real> degenerate_pair<Real>(int, const Grid1D&); \
  extern template Parity boundary_member<Real>(const SamplePair<Real>&, int); \
  extern template double eigen_residual<Real>(const BasicSamples<Real>&,      \
                                              double, double);                \
  extern template double eigen_residual<Real>(                                \
      const BasicSamples<Real>&, const std::function<Real(Real)>&, double);   \
  extern template double eigen_max_deviation<Real>(const BasicSamples<Real>&, \
                                                   double, double);           \
  extern template double eigen_max_deviation<Real>(                           \
      const BasicSamples<Real>&, const std::function<Real(Real)>&, double);

LEVYSLAB_EIGENBOX_EXTERN(double)
LEVYSLAB_EIGENBOX_EXTERN(long double)

#undef LEVYSLAB_EIGENBOX_EXTERN

}  // namespace levyslab
