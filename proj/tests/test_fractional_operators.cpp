#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "levyslab/fractional_operators.hpp"
#include "oracles.hpp"

using namespace levyslab;
using std::numbers::pi;

namespace {

// Frozen 50-digit references.
constexpr double kInvGamma15 = 1.12837916709551257390;      // 1/Gamma(1.5)
constexpr double kGamma3OverGamma25 = 1.50450555612735009853;
constexpr double kGamma4OverGamma35 = 1.80540666735282011823;
constexpr double kMl06AtMinus1 = 0.41332734094310629740;    // E_0.6(-1)
constexpr double kPiPow18 = 7.85000206246690684810;

double max_abs_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Eigen::VectorXd sample(const std::function<double(double)>& f, double x,
                       double h) {
  const auto n = static_cast<Eigen::Index>(std::llround(x / h));
  Eigen::VectorXd out(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) out[i] = f(h * static_cast<double>(i));
  return out;
}

}  // namespace

TEST_CASE("orders keep gamma tied to beta") {
  FractionalOrders o(0.5, 1.8);
  CHECK(o.alpha() == 0.5);
  CHECK(o.beta() == 1.8);
  CHECK(o.gamma() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_NOTHROW(FractionalOrders(1.0, 2.0));
  CHECK_THROWS_AS(FractionalOrders(0.0, 1.5), DomainError);
  CHECK_THROWS_AS(FractionalOrders(1.1, 1.5), DomainError);
  CHECK_THROWS_AS(FractionalOrders(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(FractionalOrders(0.5, 2.1), DomainError);
  CHECK_THROWS_AS(FractionalOrders(std::nan(""), 1.5), DomainError);
}

TEST_CASE("grid construction") {
  Grid1D g(1.0, 16);
  CHECK(g.spacing() == 0.125);
  CHECK(g.point(0) == -1.0);
  CHECK(g.point(8) == 0.0);
  CHECK(g.mirror(0) == 0);
  CHECK(g.mirror(3) == 13);
  CHECK(g.points().size() == 16);
  CHECK_THROWS_AS(Grid1D(0.0, 16), DomainError);
  CHECK_THROWS_AS(Grid1D(1.0, 12), GridError);
  CHECK_THROWS_AS(Grid1D(1.0, 4), GridError);
  CHECK_THROWS_AS(ComplexSamples(g, Eigen::VectorXcd::Zero(8)), GridError);
  auto ones = ComplexSamples::from_function(g, [](double) { return 1.0; });
  CHECK(ones.l2_norm() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("caputo examples") {
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (double x : {0.3, 1.0, 7.0}) {
      CHECK(caputo_deriv([](double) { return 1.0; }, alpha, x, x / 64) == 0.0);
    }
  }
  const double lin = caputo_deriv([](double y) { return y; }, 0.5, 1.0, 1e-4);
  CHECK(std::fabs(lin - kInvGamma15) <= 1e-3);

  MittagLeffler ml(MLParams(0.6, 1.0));
  const double ml_deriv = caputo_deriv(
      [&](double y) { return ml.real(-std::pow(y, 0.6)); }, 0.6,
      1.0, 1e-4);
  CHECK(std::fabs(ml_deriv + kMl06AtMinus1) <= 1e-3);
}

TEST_CASE("caputo of a complex function splits into parts") {
  auto f = [](double y) { return std::complex<double>(y * y, std::sin(y)); };
  const auto c = caputo_deriv(f, 0.4, 1.0, 1e-3);
  const double re = caputo_deriv([](double y) { return y * y; }, 0.4, 1.0, 1e-3);
  const double im = caputo_deriv([](double y) { return std::sin(y); }, 0.4, 1.0, 1e-3);
  CHECK(c.real() == doctest::Approx(re).epsilon(1e-14));
  CHECK(c.imag() == doctest::Approx(im).epsilon(1e-14));
}

TEST_CASE("caputo at every node matches the last-node form") {
  const double h = 1e-2;
  Eigen::VectorXd s = sample([](double y) { return std::exp(-y) * y; }, 1.0, h);
  Eigen::VectorXd all = caputo_l1(s, 0.7, h);
  CHECK(all[0] == 0.0);
  for (Eigen::Index n : {5, 50, 100}) {
    CHECK(all[n] == doctest::Approx(caputo_l1_last(s.head(n + 1), 0.7, h)).epsilon(1e-13));
  }
}

TEST_CASE("caputo argument checks") {
  auto f = [](double y) { return y; };
  CHECK_THROWS_AS(caputo_deriv(f, 0.5, 0.0, 1e-3), DomainError);
  CHECK_THROWS_AS(caputo_deriv(f, 0.5, -1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(caputo_deriv(f, 0.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(caputo_deriv(f, 1.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(caputo_deriv(f, 0.5, 1.0, 0.2), DomainError);
  CHECK_THROWS_AS(caputo_deriv(f, 0.5, 1.0, 0.0), DomainError);
  CHECK_NOTHROW(caputo_deriv(f, 0.5, 1.0, 0.125));
}

TEST_CASE("riemann-liouville examples") {
  const double one = rl_deriv([](double) { return 1.0; }, 0.5, 4.0, 1e-4);
  CHECK(std::fabs(one - 0.5 / std::sqrt(pi)) <= 1e-4);
  const double sq = rl_deriv([](double y) { return y * y; }, 0.5, 1.0, 1e-4);
  CHECK(std::fabs(sq - kGamma3OverGamma25) <= 1e-3);
  const double lin_rl = rl_deriv([](double y) { return y; }, 0.5, 1.0, 1e-4);
  const double lin_c = caputo_deriv([](double y) { return y; }, 0.5, 1.0, 1e-4);
  CHECK(std::fabs(lin_rl - lin_c) <= 1e-6);
}

TEST_CASE("riemann-liouville argument checks") {
  auto f = [](double y) { return y; };
  CHECK_THROWS_AS(rl_deriv(f, 1.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(rl_deriv(f, 2.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(rl_deriv(f, 0.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(rl_deriv(f, 0.5, 0.0, 1e-3), DomainError);
  CHECK_THROWS_AS(rl_deriv(f, 0.5, 1.0, 0.5), DomainError);
}

TEST_CASE("product trapezoid integral is exact for linear data") {
  // I^mu y at x = x^(1+mu) / Gamma(2+mu)
  for (double mu : {0.2, 0.5, 1.5}) {
    const double h = 1.0 / 37;
    Eigen::VectorXd s = sample([](double y) { return 2.0 + y; }, 1.0, h);
    const double exact = 2.0 / oracle::gamma50(1.0 + mu) + 1.0 / oracle::gamma50(2.0 + mu);
    CHECK(rl_integral_last(s, mu, h) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("power rule") {
  for (int p : {1, 2, 3}) {
    for (double alpha : {0.3, 0.5, 0.8}) {
      CAPTURE(p);
      CAPTURE(alpha);
      const double got =
          rl_deriv([p](double y) { return std::pow(y, p); }, alpha, 1.0, 1e-4);
      const double exact = oracle::gamma50(p + 1.0) / oracle::gamma50(p + 1.0 - alpha);
      CHECK(std::fabs(got - exact) <= 1e-3);
    }
  }
}

TEST_CASE("power rule above order one") {
  for (double alpha : {1.3, 1.7}) {
    for (int p : {2, 3}) {
      const double got =
          rl_deriv([p](double y) { return std::pow(y, p); }, alpha, 1.0, 1e-4);
      const double exact = oracle::gamma50(p + 1.0) / oracle::gamma50(p + 1.0 - alpha);
      CHECK(std::fabs(got - exact) <= 1e-3);
    }
  }
}

TEST_CASE("caputo and riemann-liouville differ by the initial-value terms") {
  // f = 1 + y: RL - Caputo = x^-alpha / Gamma(1 - alpha)
  for (double alpha : {0.3, 0.5, 0.8}) {
    for (double x : {0.5, 1.0, 2.0}) {
      auto f = [](double y) { return 1.0 + y; };
      const double rl = rl_deriv(f, alpha, x, 1e-4);
      const double c = caputo_deriv(f, alpha, x, 1e-4);
      const double jump = std::pow(x, -alpha) / oracle::gamma50(1.0 - alpha);
      CHECK(std::fabs(rl - c - jump) <= 1e-3);
    }
  }
  // Order in (1, 2): f = y has a vanishing second derivative, so the RL
  // derivative is the f'(0) term alone.
  for (double alpha : {1.2, 1.6}) {
    const double rl = rl_deriv([](double y) { return y; }, alpha, 1.0, 1e-4);
    CHECK(std::fabs(rl - 1.0 / oracle::gamma50(2.0 - alpha)) <= 1e-3);
  }
}

TEST_CASE("grunwald-letnikov examples") {
  {
    const double h = 1e-3;
    Eigen::VectorXd s = sample([](double y) { return y; }, 1.0, h);
    Eigen::VectorXd d = gl_deriv(s, 1.0, h);
    for (Eigen::Index i = 1; i < d.size(); ++i) {
      REQUIRE(std::fabs(d[i] - 1.0) <= 1e-9);
    }
    Eigen::VectorXd half = gl_deriv(s, 0.5, h);
    CHECK(std::fabs(half[half.size() - 1] - kInvGamma15) <= 1e-2);
  }
  {
    const double h = 1e-3;
    Eigen::VectorXd s = sample([](double y) { return y * y * y; }, 1.0, h);
    Eigen::VectorXd d = gl_deriv(s, 0.5, h);
    CHECK(std::fabs(d[d.size() - 1] - kGamma4OverGamma35) <= 1e-2);
  }
  Eigen::VectorXd s = Eigen::VectorXd::LinSpaced(11, 0.0, 1.0);
  CHECK_THROWS_AS(gl_deriv(s, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(gl_deriv(s, 2.0, 0.1), DomainError);
  CHECK_THROWS_AS(gl_deriv(s, -0.5, 0.1), DomainError);
}

TEST_CASE("three discretizations agree and tighten with the step") {
  const std::function<double(double)> funcs[] = {
      [](double y) { return y * y; },
      [](double y) { return std::sin(2.0 * y); },
      [](double y) { return y * std::exp(-y); },
  };
  for (const auto& f : funcs) {
    for (double alpha : {0.3, 0.5, 0.8}) {
      double prev_spread = 0.0;
      for (double h : {1e-3, 5e-4}) {
        const double c = caputo_deriv(f, alpha, 1.0, h);
        const double rl = rl_deriv(f, alpha, 1.0, h);
        Eigen::VectorXd s = sample(f, 1.0, h);
        const double gl = gl_deriv(s, alpha, h)[s.size() - 1];
        const double spread = std::max({std::fabs(c - rl), std::fabs(c - gl),
                                         std::fabs(rl - gl)});
        CAPTURE(alpha);
        CAPTURE(h);
        CHECK(spread <= 1e-2);
        if (h < 1e-3) CHECK(spread < prev_spread);
        prev_spread = spread;
      }
    }
  }
}

TEST_CASE("mittag-leffler functions are caputo eigenfunctions") {
  for (double g : {0.5, 0.7, 0.9}) {
    MittagLeffler ml(MLParams(g, 1.0));
    for (double lambda : {-1.0, -2.0}) {
      auto f = [&](double y) {
        return ml.real(lambda * std::pow(y, g));
      };
      for (double z : {0.5, 1.0}) {
        const double d = caputo_deriv(f, g, z, 1e-4);
        CAPTURE(g);
        CAPTURE(lambda);
        CAPTURE(z);
        CHECK(std::fabs(d - lambda * f(z)) <= 1e-3);
      }
    }
  }
}

TEST_CASE("riesz examples") {
  Grid1D g(1.0, 256);
  auto s = ComplexSamples::from_function(g, [](double r) { return std::sin(pi * r); });
  {
    auto out = riesz_apply(s, 2.0);
    CHECK(max_abs_diff(out.values(), pi * pi * s.values()) <= 1e-10);
  }
  {
    auto out = riesz_apply(s, 1.8);
    CHECK(max_abs_diff(out.values(), kPiPow18 * s.values()) <= 1e-10 * kPiPow18);
  }
  {
    auto c = ComplexSamples::from_function(g, [](double) { return 1.0; });
    CHECK(riesz_apply(c, 1.5).values().cwiseAbs().maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(riesz_apply(s, 1.0), DomainError);
  CHECK_THROWS_AS(riesz_apply(s, 2.5), DomainError);
}

TEST_CASE("riesz scaling with the box width") {
  for (double L : {0.5, 2.0, 3.0}) {
    Grid1D g(L, 512);
    for (int m : {1, 2, 5}) {
      auto s = ComplexSamples::from_function(
          g, [&](double r) { return std::sin(m * pi * r / L); });
      const double e = std::pow(m * pi / L, 1.8);
      CHECK(max_abs_diff(riesz_apply(s, 1.8).values(), e * s.values()) <= 1e-10 * e);
    }
  }
}

TEST_CASE("riesz is linear") {
  std::mt19937_64 rng(20241016);
  std::normal_distribution<double> normal;
  Grid1D g(1.5, 128);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXcd a(128);
    Eigen::VectorXcd b(128);
    for (Eigen::Index j = 0; j < 128; ++j) {
      a[j] = {normal(rng), normal(rng)};
      b[j] = {normal(rng), normal(rng)};
    }
    const std::complex<double> ca(normal(rng), normal(rng));
    const std::complex<double> cb(normal(rng), normal(rng));
    const double beta = std::uniform_real_distribution<double>(1.01, 2.0)(rng);
    auto lhs = riesz_apply(ComplexSamples(g, ca * a + cb * b), beta);
    auto ra = riesz_apply(ComplexSamples(g, a), beta);
    auto rb = riesz_apply(ComplexSamples(g, b), beta);
    const Eigen::VectorXcd rhs = ca * ra.values() + cb * rb.values();
    CHECK(max_abs_diff(lhs.values(), rhs) <= 1e-12 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("riesz preserves realness and parity") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  Grid1D g(1.0, 64);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd v(64);
    for (Eigen::Index j = 0; j < 64; ++j) v[j] = normal(rng);
    Eigen::VectorXcd even(64);
    Eigen::VectorXcd odd(64);
    for (std::size_t j = 0; j < 64; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      const auto mj = static_cast<Eigen::Index>(g.mirror(j));
      even[jj] = 0.5 * (v[jj] + v[mj]);
      odd[jj] = 0.5 * (v[jj] - v[mj]);
    }
    for (double beta : {1.3, 1.8, 2.0}) {
      auto he = riesz_apply(ComplexSamples(g, even), beta).values();
      auto ho = riesz_apply(ComplexSamples(g, odd), beta).values();
      const double scale = std::max(he.cwiseAbs().maxCoeff(), ho.cwiseAbs().maxCoeff());
      CHECK(he.imag().cwiseAbs().maxCoeff() <= 1e-12 * scale);
      CHECK(ho.imag().cwiseAbs().maxCoeff() <= 1e-12 * scale);
      for (std::size_t j = 0; j < 64; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        const auto mj = static_cast<Eigen::Index>(g.mirror(j));
        REQUIRE(std::abs(he[jj] - he[mj]) <= 1e-12 * scale);
        REQUIRE(std::abs(ho[jj] + ho[mj]) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("order two matches the second-difference stencil") {
  auto f = [](double r) { return std::exp(std::sin(pi * r)); };
  double prev = 0.0;
  for (std::size_t n : {64, 128, 256}) {
    Grid1D g(1.0, n);
    auto s = ComplexSamples::from_function(g, f);
    auto spectral = riesz_apply(s, 2.0).values();
    const double h = g.spacing();
    double err = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jp = (j + 1) % n;
      const std::size_t jm = (j + n - 1) % n;
      const std::complex<double> stencil = -(s[jp] - 2.0 * s[j] + s[jm]) / (h * h);
      err = std::max(err, std::abs(stencil - spectral[static_cast<Eigen::Index>(j)]));
    }
    CAPTURE(n);
    CHECK(err <= 200.0 * h * h);
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.05));
    prev = err;
  }
}

TEST_CASE("fourier multiplier ordering") {
  Grid1D g(2.0, 8);
  CHECK(fourier_wavenumber(g, 0) == 0.0);
  CHECK(fourier_wavenumber(g, 1) == doctest::Approx(pi / 2));
  CHECK(fourier_wavenumber(g, 3) == doctest::Approx(3 * pi / 2));
  CHECK(fourier_wavenumber(g, 4) == doctest::Approx(-2 * pi));
  CHECK(fourier_wavenumber(g, 7) == doctest::Approx(-pi / 2));
  auto s = ComplexSamples::from_function(g, [](double r) { return std::cos(pi * r / 2); });
  auto same = apply_fourier_multiplier(s, [](double) { return 1.0; });
  CHECK(max_abs_diff(same.values(), s.values()) <= 1e-14);
}

TEST_CASE("extended precision transform") {
  Grid1D g(1.0, 4096);
  auto s = BasicSamples<long double>::from_function(
      g, [](double r) { return std::sin(3.0L * std::numbers::pi_v<long double> * r); });
  const long double e = std::pow(3.0L * std::numbers::pi_v<long double>, 1.8L);
  auto out = riesz_apply(s, 1.8);
  const long double dev = (out.values() - e * s.values()).cwiseAbs().maxCoeff();
  // Double samples of the same mode sit near 1e-10 relative.
  CHECK(static_cast<double>(dev / e) <= 1e-12);
  auto round_trip = apply_fourier_multiplier(s, [](long double) { return 1.0L; });
  CHECK(static_cast<double>((round_trip.values() - s.values()).cwiseAbs().maxCoeff()) <= 1e-17);
}
