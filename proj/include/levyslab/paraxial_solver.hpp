#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "levyslab/fractional_operators.hpp"
#include "levyslab/grid.hpp"

namespace levyslab {

/// Physical setup of the slab: half-width L, paraxial wavenumber k,
/// omega_beta = omega / K_beta, the fractional orders and the mode cutoff M.
class SlabConfig {
 public:
  SlabConfig(double half_width, double wavenumber, double omega_beta,
             FractionalOrders orders, int mode_cutoff);

  double half_width() const noexcept { return half_width_; }
  double wavenumber() const noexcept { return wavenumber_; }
  double omega_beta() const noexcept { return omega_beta_; }
  const FractionalOrders& orders() const noexcept { return orders_; }
  int mode_cutoff() const noexcept { return mode_cutoff_; }

  /// e_m = (m pi / L)^beta
  double eigenvalue(int m) const;
  /// c_m = (omega_beta + e_m) / (2k)
  double rate(int m) const;

 private:
  double half_width_;
  double wavenumber_;
  double omega_beta_;
  FractionalOrders orders_;
  int mode_cutoff_;
};

/// z-envelope Z(z) = Z(0) E_gamma(i c z^gamma) of a single transverse mode.
/// Z(0) is a real amplitude; gamma lies in (0, 1].
struct ZEnvelope {
  double z0 = 1.0;
  double rate = 0.0;
  double gamma = 0.5;

  /// Throws DomainError unless gamma is in (0, 1] and rate is finite.
  void validate() const;
};

/// Sine-series coefficients A_m (m = 1..M) of u(0, r) and their eigenvalues.
struct ModeExpansion {
  Grid1D grid;
  Eigen::VectorXcd coeffs;
  Eigen::VectorXd eigenvalues;
  /// L sum_{m > M} |A_m|^2 estimated from Parseval at z = 0.
  double discarded_energy = 0.0;

  int size() const noexcept { return static_cast<int>(coeffs.size()); }
  /// 1-based index of the coefficient with the largest magnitude.
  int dominant_mode() const;
};

/// Z(0) E_gamma(i c z^gamma).
///
/// The envelope functions accept an absolute error of up to about
/// 16 eps (c z^gamma)^(1/gamma), the limit set by rounding the argument, when
/// that exceeds the Mittag-Leffler default tolerance.
std::complex<double> z_envelope(const ZEnvelope& env, double z);

/// z_envelope at every point of z, sharing one Mittag-Leffler evaluator.
Eigen::VectorXcd z_envelope_samples(const ZEnvelope& env,
                                    const Eigen::Ref<const Eigen::VectorXd>& z);

/// (R, I) with R = Z(0) E_{2g}(-c^2 z^{2g}), I = Z(0) c z^g E_{2g,g+1}(-c^2 z^{2g}).
std::pair<double, double> z_envelope_parts(const ZEnvelope& env, double z);

/// |Z(z)|^2 = R^2 + I^2.
double norm_z(const ZEnvelope& env, double z);

/// Z(0)^2 [1 - 2 c^2 z^{2g} / Gamma(2g+1) + c^2 z^{2g} / Gamma(g+1)^2]
double norm_small_z(const ZEnvelope& env, double z);

/// Z(0)^2 c^-2 z^{-2g} / Gamma(1-g)^2
double norm_large_z(const ZEnvelope& env, double z);

/// Max-norm of the even part (u(r) + u(-r)) / 2 on the periodic grid.
double even_part_magnitude(const ComplexSamples& u0);

/// A_m = (1/L) h sum_j u0(r_j) sin(m pi r_j / L), m = 1..cfg.mode_cutoff().
/// Throws ParityError if the even part of u0 exceeds 1e-8 max(1, max|u0|).
ModeExpansion project_initial(const ComplexSamples& u0, const SlabConfig& cfg);

/// u(z, r) = sum_m A_m E_gamma(i c_m z^gamma) sin(m pi r / L) for each z.
std::vector<ComplexSamples> solve_field(const SlabConfig& cfg,
                                        const ModeExpansion& expansion,
                                        const std::vector<double>& z_values);

/// h sum_j |u_j|^2
double field_norm(const ComplexSamples& u);

/// Single-mode relaxation envelope E_alpha(omega t^alpha).
double time_envelope(double omega, double alpha, double t);

}  // namespace levyslab
