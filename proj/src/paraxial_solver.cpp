#include "levyslab/paraxial_solver.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "levyslab/eigenbox.hpp"
#include "levyslab/special_functions.hpp"

namespace levyslab {

namespace {

constexpr double kParityTolerance = 1e-8;

// sin(m pi r_j / L) on the grid with exact zeros at the walls.
Eigen::MatrixXd sine_table(const Grid1D& grid, int modes) {
  const auto n = static_cast<Eigen::Index>(grid.n_points());
  const double nn = static_cast<double>(grid.n_points());
  Eigen::MatrixXd table(n, modes);
  for (int m = 1; m <= modes; ++m) {
    for (Eigen::Index j = 0; j < n; ++j) {
      table(j, m - 1) = sin_pi(m * (2.0 * static_cast<double>(j) / nn - 1.0));
    }
  }
  return table;
}

}  // namespace

SlabConfig::SlabConfig(double half_width, double wavenumber, double omega_beta,
                       FractionalOrders orders, int mode_cutoff)
    : half_width_(half_width),
      wavenumber_(wavenumber),
      omega_beta_(omega_beta),
      orders_(orders),
      mode_cutoff_(mode_cutoff) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("SlabConfig: L must be positive");
  }
  if (wavenumber == 0.0 || !std::isfinite(wavenumber)) {
    throw DomainError("SlabConfig: k must be finite and nonzero");
  }
  if (!std::isfinite(omega_beta)) {
    throw DomainError("SlabConfig: omega_beta must be finite");
  }
  if (mode_cutoff < 1) throw DomainError("SlabConfig: M must be >= 1");
}

double SlabConfig::eigenvalue(int m) const {
  return odd_eigenvalue(m, half_width_, orders_.beta());
}

double SlabConfig::rate(int m) const {
  return (omega_beta_ + eigenvalue(m)) / (2.0 * wavenumber_);
}

namespace {

// Rounding of the argument alone limits E_g(z) to about eps |z|^(1/g), the
// phase of the exponential term; for large c z^g that floor can exceed the
// evaluator's default tolerance. Accept its best effort within the floor.
template <class Eval>
std::complex<double> envelope_value(Eval&& eval, double gamma_order,
                                    std::complex<double> arg) {
  try {
    return eval(arg).value;
  } catch (const NonConvergence& e) {
    const EvalResult& best = e.best_effort();
    const double floor =
        16.0 * DBL_EPSILON * std::pow(std::abs(arg), 1.0 / gamma_order);
    if (best.est_abs_error <=
        std::max(floor, MLOptions{}.tolerance) * std::max(1.0, std::abs(best.value))) {
      return best.value;
    }
    throw;
  }
}

std::complex<double> envelope_value(const MittagLeffler& ml,
                                    std::complex<double> arg) {
  return envelope_value(ml, ml.params().gamma_order(), arg);
}

double envelope_value(const MLParams& p, double arg) {
  return envelope_value([&p](std::complex<double> z) { return mittag_leffler(p, z); },
                        p.gamma_order(), arg)
      .real();
}

}  // namespace

void ZEnvelope::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("ZEnvelope: gamma must lie in (0, 1]");
  }
  if (!std::isfinite(rate) || !std::isfinite(z0)) {
    throw DomainError("ZEnvelope: rate and Z(0) must be finite");
  }
}

int ModeExpansion::dominant_mode() const {
  Eigen::Index best = 0;
  coeffs.cwiseAbs().maxCoeff(&best);
  return static_cast<int>(best) + 1;
}

std::complex<double> z_envelope(const ZEnvelope& env, double z) {
  env.validate();
  if (!(z >= 0.0)) throw DomainError("z_envelope: z must be >= 0");
  const std::complex<double> arg(0.0, env.rate * std::pow(z, env.gamma));
  return env.z0 * envelope_value(MittagLeffler(MLParams(env.gamma, 1.0)), arg);
}

Eigen::VectorXcd z_envelope_samples(const ZEnvelope& env,
                                    const Eigen::Ref<const Eigen::VectorXd>& z) {
  env.validate();
  const MittagLeffler ml(MLParams(env.gamma, 1.0));
  Eigen::VectorXcd out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (!(z[i] >= 0.0)) throw DomainError("z_envelope_samples: z must be >= 0");
    const std::complex<double> arg(0.0, env.rate * std::pow(z[i], env.gamma));
    out[i] = env.z0 * envelope_value(ml, arg);
  }
  return out;
}

std::pair<double, double> z_envelope_parts(const ZEnvelope& env, double z) {
  env.validate();
  if (!(z >= 0.0)) throw DomainError("z_envelope_parts: z must be >= 0");
  const double g = env.gamma;
  const double cz = env.rate * std::pow(z, g);
  const double arg = -cz * cz;
  const double re = envelope_value(MLParams(2.0 * g, 1.0), arg);
  const double im = cz * envelope_value(MLParams(2.0 * g, g + 1.0), arg);
  return {env.z0 * re, env.z0 * im};
}

double norm_z(const ZEnvelope& env, double z) {
  const auto [re, im] = z_envelope_parts(env, z);
  return re * re + im * im;
}

double norm_small_z(const ZEnvelope& env, double z) {
  const double g = env.gamma;
  const double x = env.rate * env.rate * std::pow(z, 2.0 * g);
  const double g1 = gamma_fn(g + 1.0);
  return env.z0 * env.z0 *
         (1.0 - 2.0 * x / gamma_fn(2.0 * g + 1.0) + x / (g1 * g1));
}

double norm_large_z(const ZEnvelope& env, double z) {
  const double g = env.gamma;
  const double rg = reciprocal_gamma(1.0 - g);
  if (rg == 0.0) return 0.0;  // gamma = 1: no algebraic tail
  return env.z0 * env.z0 * std::pow(env.rate, -2.0) * std::pow(z, -2.0 * g) *
         rg * rg;
}

double even_part_magnitude(const ComplexSamples& u0) {
  const Grid1D& grid = u0.grid();
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    worst = std::max(worst, 0.5 * std::abs(u0[j] + u0[grid.mirror(j)]));
  }
  return worst;
}

ModeExpansion project_initial(const ComplexSamples& u0, const SlabConfig& cfg) {
  const Grid1D& grid = u0.grid();
  if (std::fabs(grid.half_width() - cfg.half_width()) >
      1e-14 * cfg.half_width()) {
    throw DomainError("project_initial: grid and slab half-widths differ");
  }
  const double scale = std::max(1.0, u0.values().cwiseAbs().maxCoeff());
  const double even = even_part_magnitude(u0);
  if (even > kParityTolerance * scale) {
    throw ParityError("project_initial: initial condition has an even part of magnitude " +
                          std::to_string(even),
                      even);
  }
  const int modes = cfg.mode_cutoff();
  const Eigen::MatrixXd table = sine_table(grid, modes);
  const double h = grid.spacing();
  const double L = grid.half_width();

  Eigen::VectorXcd coeffs(modes);
  coeffs.real() = (h / L) * (table.transpose() * u0.values().real());
  coeffs.imag() = (h / L) * (table.transpose() * u0.values().imag());

  Eigen::VectorXd eigenvalues(modes);
  for (int m = 1; m <= modes; ++m) eigenvalues[m - 1] = cfg.eigenvalue(m);

  const double total = h * u0.values().squaredNorm();
  const double kept = L * coeffs.squaredNorm();
  return {grid, std::move(coeffs), std::move(eigenvalues),
          std::max(0.0, total - kept)};
}

std::vector<ComplexSamples> solve_field(const SlabConfig& cfg,
                                        const ModeExpansion& expansion,
                                        const std::vector<double>& z_values) {
  const int modes = expansion.size();
  if (expansion.eigenvalues.size() != modes ||
      std::fabs(expansion.grid.half_width() - cfg.half_width()) >
          1e-14 * cfg.half_width()) {
    throw DomainError("solve_field: expansion does not match the slab");
  }
  const double g = cfg.orders().gamma();
  const MittagLeffler ml(MLParams(g, 1.0));
  const Eigen::MatrixXd table = sine_table(expansion.grid, modes);
  std::vector<ComplexSamples> out;
  out.reserve(z_values.size());
  for (double z : z_values) {
    if (!(z >= 0.0)) throw DomainError("solve_field: z must be >= 0");
    Eigen::VectorXcd weights(modes);
    const double zg = std::pow(z, g);
    for (int m = 1; m <= modes; ++m) {
      const std::complex<double> arg(0.0, cfg.rate(m) * zg);
      weights[m - 1] = expansion.coeffs[m - 1] * envelope_value(ml, arg);
    }
    Eigen::VectorXcd u(table.rows());
    u.real() = table * weights.real();
    u.imag() = table * weights.imag();
    out.emplace_back(expansion.grid, std::move(u));
  }
  return out;
}

double field_norm(const ComplexSamples& u) {
  return u.grid().spacing() * u.values().squaredNorm();
}

double time_envelope(double omega, double alpha, double t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("time_envelope: alpha must lie in (0, 1]");
  }
  if (!(t >= 0.0)) throw DomainError("time_envelope: t must be >= 0");
  if (t == 0.0) return 1.0;
  return mittag_leffler_real(MLParams(alpha, 1.0), omega * std::pow(t, alpha));
}

}  // namespace levyslab
