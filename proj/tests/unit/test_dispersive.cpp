#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wblab/bessel.hpp"
#include "wblab/dynamics.hpp"
#include "wblab/error.hpp"
#include "wblab/estimates.hpp"
#include "wblab/experiments.hpp"
#include "wblab/initial_data.hpp"
#include "wblab/kernel.hpp"
#include "wblab/norms.hpp"
#include "wblab/operators.hpp"
#include "wblab/quadrature.hpp"
#include "wblab/strichartz.hpp"
#include "wblab/symbol_table.hpp"
#include "wblab/symbols.hpp"

using namespace wblab;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(Bessel, Values) {
  EXPECT_DOUBLE_EQ(bessel_j(0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(bessel_j(1, 0.0), 0.0);
  EXPECT_LT(std::abs(bessel_j(0, 2.404825557695773)), 1e-10);
  EXPECT_THROW(bessel_j(0, -1.0), DomainError);
}

TEST(Bessel, MatchesIntegralRepresentation) {
  for (int k : {0, 1, 2})
    for (double x = 0.0; x < 80.0; x += 0.37) {
      const double ref = oracle::bessel_integral(k, x);
      EXPECT_NEAR(bessel_j(k, x), ref, 1e-12) << "k=" << k << " x=" << x;
    }
  // either side of the branch switch
  for (double x : {16.9, 16.999999, 17.0, 17.000001, 17.1})
    EXPECT_NEAR(bessel_j(0, x), oracle::bessel_integral(0, x), 1e-13);
}

TEST(Bessel, DecayEnvelope) {
  double worst = 0.0;
  for (double r = 1.0; r <= 2000.0; r += 0.01) worst = std::max(worst, std::abs(bessel_j(0, r)) * std::sqrt(r));
  EXPECT_LE(worst, 0.8);
}

TEST(Bessel, DerivativeIdentity) {
  // ∂_r[r^{−k}J_k] = −r^{−k}J_{k+1}
  const double h = 1e-5;
  for (int k : {0, 1}) {
    double err = 0.0, scale = 0.0;
    for (double r = 0.1; r <= 50.0; r += 0.013) {
      auto g = [&](double x) { return std::pow(x, -k) * bessel_j(k, x); };
      const double fd = (g(r + h) - g(r - h)) / (2 * h);
      const double rhs = -std::pow(r, -k) * bessel_j(k + 1, r);
      err = std::max(err, std::abs(fd - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    EXPECT_LT(err / scale, 1e-6) << "k=" << k;
  }
}

TEST(Quadrature, OscillatoryExponential) {
  QuadratureOptions opt;
  for (double w : {1.0, 50.0, 400.0}) {
    const auto res = integrate_gk15([&](double x) { return std::exp(cplx(0.0, w * x)); }, 0.0, 1.0, opt);
    const cplx exact = (std::exp(cplx(0.0, w)) - 1.0) / cplx(0.0, w);
    EXPECT_LT(std::abs(res.value - exact), 1e-12);
    EXPECT_LE(res.error, 1e-12);
  }
}

TEST(Quadrature, RefusesOverBudget) {
  QuadratureOptions opt;
  opt.initial_panels = 2;
  opt.max_panels = 4;
  EXPECT_THROW(integrate_gk15([](double x) { return std::exp(cplx(0.0, 1e4 * x)); }, 0.0, 1.0, opt),
               ResolutionError);
}

TEST(Kernel, OriginAtTimeZero) {
  // oracle: composite Simpson on rβ(r), 2·10⁵ intervals
  const int N = 200000;
  const double h = 1.5 / N;
  double s = 0.0;
  for (int j = 0; j <= N; ++j) {
    const double r = 0.5 + j * h;
    const double w = (j == 0 || j == N) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    s += w * r * bump_beta(r);
  }
  s *= h / 3;
  EXPECT_NEAR(beta_mass(), s, 1e-12);
  for (double lam : {0.25, 1.0, 4.0}) {
    const KernelValue v = kernel_I({lam, 1.0, 0.0, 0.0});
    EXPECT_NEAR(v.value.real(), 2 * kPi * lam * lam * s, 1e-10 * lam * lam);
    EXPECT_NEAR(v.value.imag(), 0.0, 1e-14);
  }
}

TEST(Kernel, TriangleInequality) {
  const double cap = 2 * kPi * beta_mass();
  for (double lam : {0.5, 2.0})
    for (double x : {0.0, 0.3, 1.0, 3.0, 10.0})
      for (double t : {0.0, 1.0, 10.0})
        EXPECT_LE(std::abs(kernel_I({lam, 0.3, x, t}).value), cap * lam * lam * (1 + 1e-12));
}

TEST(Kernel, AgainstDirectSimpson) {
  for (auto [lam, mu, x, t] : {std::tuple{1.0, 1.0, 0.7, 3.0}, {2.0, 0.1, 2.0, 10.0}, {0.5, 1.0, 5.0, 1.0}}) {
    const int N = 40000;
    const double h = 1.5 / N;
    cplx s = 0.0;
    for (int j = 0; j <= N; ++j) {
      const double r = 0.5 + j * h;
      const double w = (j == 0 || j == N) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      const double ph = t * lam * r * std::sqrt(oracle::tanh_k(mu, lam * r));
      s += w * r * bump_beta(r) * oracle::bessel_integral(0, lam * r * x, 256) * std::exp(cplx(0.0, ph));
    }
    s *= 2 * kPi * lam * lam * h / 3;
    EXPECT_LT(std::abs(kernel_I({lam, mu, x, t}).value - s), 1e-9 * lam * lam);
  }
}

TEST(Kernel, RadialSymmetryOnGrid) {
  // the grid convolution (2π)²P_λS(−t)f of a centred narrow Gaussian is
  // radially symmetric; compare mirrored and transposed points
  const Grid g = make_grid(128, 40.0);
  const SymbolTable table(g, 1.0);
  const double c = 20.0;
  const Spectrum f = ScalarField::from_function(g, [&](double a, double b) {
                       return std::exp(-((a - c) * (a - c) + (b - c) * (b - c)) / 0.0625);
                     }).to_spectrum();
  const auto u = apply_multiplier(propagate_component(f, -2.0, +1, table.m()), symbol_dyadic(1.0)).physical();
  const int n = g.n(), m = n / 2;
  for (auto [a, b] : {std::pair{3, 5}, {7, 1}, {10, 4}}) {
    const cplx ref = u[(m + a) * n + m + b];
    EXPECT_LT(std::abs(u[(m + b) * n + m + a] - ref), 1e-12 * std::abs(ref) + 1e-15);
    EXPECT_LT(std::abs(u[(m - a) * n + m + b] - ref), 1e-12 * std::abs(ref) + 1e-15);
  }
}

TEST(Kernel, ConvolutionMatchesGridPropagation) {
  // [S(−t)P_λ f] on the grid against ∫I(x−y, t)f(y)dy by quadrature;
  // with f̂(η) = ∫f e^{−iyη}, I∗f = (2π)²·(P_λS(−t)f)
  const double lam = 1.0, mu = 1.0, t = 2.0, sigma = 0.25;
  const Grid g = make_grid(256, 40.0);
  const SymbolTable table(g, mu);
  const double c = 20.0;
  auto gauss = [&](double a, double b) { return std::exp(-((a - c) * (a - c) + (b - c) * (b - c)) / (sigma * sigma)); };
  const Spectrum f = ScalarField::from_function(g, gauss).to_spectrum();
  const auto grid_values =
      apply_multiplier(propagate_component(f, -t, +1, table.m()), symbol_dyadic(lam)).physical();
  const int n = g.n(), m = n / 2;
  const double h = g.spacing();
  const int reach = static_cast<int>(std::ceil(6 * sigma / h));
  for (auto [a, b] : {std::pair{0, 0}, {3, 0}, {0, 5}, {4, 4}, {7, -2}, {-6, 3}, {10, 0}, {0, -12}, {8, 9}, {-15, 4}}) {
    const double x1 = (m + a) * h, x2 = (m + b) * h;
    cplx conv = 0.0;
    for (int p = -reach; p <= reach; ++p)
      for (int q = -reach; q <= reach; ++q) {
        const double y1 = (m + p) * h, y2 = (m + q) * h;
        const double fy = gauss(y1, y2);
        if (fy < 1e-18) continue;
        const double rho = std::hypot(x1 - y1, x2 - y2);
        conv += kernel_I({lam, mu, rho, t}).value * fy;
      }
    conv *= h * h;
    const cplx ref = 4 * kPi * kPi * grid_values[(m + a) * n + m + b];
    EXPECT_LT(std::abs(conv - ref), 0.01 * std::abs(ref)) << a << "," << b;
  }
}

TEST(Decay, TimeZeroUsesMassConstant) {
  for (double lam : {0.25, 1.0, 8.0}) {
    const DecayRow r = dispersive_ratio(lam, 0.1, 0.0);
    EXPECT_NEAR(r.ratio, 2 * kPi * beta_mass(), 1e-10);
    EXPECT_DOUBLE_EQ(r.theory_bound, lam * lam);
  }
}

TEST(Decay, BoundedAndDecaysAtUnitScale) {
  double lo = 1e300, hi = 0.0;
  for (double t : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
    const DecayRow r = dispersive_ratio(1.0, 1.0, t);
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  EXPECT_LT(hi / lo, 10.0);
  std::vector<double> ts{10, 15, 20, 30, 50, 70, 100}, sup;
  for (double t : ts) sup.push_back(dispersive_ratio(1.0, 1.0, t).sup_abs_I);
  EXPECT_NEAR(fit_power_law(ts, sup).slope, -1.0, 0.15);
}

TEST(Decay, StableUnderNodeDoubling) {
  KernelOptions fine;
  fine.node_density = 2.0;
  for (auto [lam, mu, t] : {std::tuple{1.0, 1.0, 10.0}, {4.0, 0.1, 30.0}, {0.25, 0.01, 100.0}}) {
    const double a = dispersive_ratio(lam, mu, t).ratio;
    const double b = dispersive_ratio(lam, mu, t, fine).ratio;
    EXPECT_LT(std::abs(a - b), 1e-8 * a);
  }
}

TEST(VanDerCorput, Fresnel) {
  double worst = 0.0;
  for (double t = 1.0; t <= 1e4; t *= 1.5) {
    worst = std::max(worst, van_der_corput_ratio([](double r) { return 0.5 * r * r; }, [](double) { return 1.0; },
                                                 0.0, 1.0, t, 1.0));
  }
  EXPECT_TRUE(std::isfinite(worst));
  EXPECT_LT(worst, 2.0);
}

TEST(VanDerCorput, ZeroAmplitudeAndDomain) {
  auto psi = [](double r) { return r * r; };
  auto zero = [](double) { return 0.0; };
  EXPECT_EQ(van_der_corput_ratio(psi, zero, 0.0, 1.0, 3.0, 2.0), 0.0);
  EXPECT_THROW(van_der_corput_ratio(psi, [](double) { return 1.0; }, 0.0, 1.0, 0.0, 2.0), DomainError);
}

TEST(VanDerCorput, StationaryDispersionPhase) {
  double worst = 0.0;
  for (double lam : {0.25, 1.0, 4.0})
    for (double mu : {1.0, 0.1})
      for (double t : {1.0, 10.0, 100.0}) {
        double A = 1e300;
        for (double r = 0.5; r <= 2.0; r += 0.001)
          A = std::min(A, lam * lam * std::abs(m_mu_derivatives(mu, lam * r).d2m));
        const double v = van_der_corput_ratio([&](double r) { return m_mu(mu, lam * r); },
                                              [](double r) { return r * bump_beta(r); }, 0.5, 2.0, t, A);
        worst = std::max(worst, v);
      }
  EXPECT_TRUE(std::isfinite(worst));
  EXPECT_LT(worst, 10.0);
}

TEST(Strichartz, EnergyPairIsIsometry) {
  const Grid g = packet_grid(1.0);
  const Spectrum f = random_band_field(g, 0.5, 2.0, 3);
  const auto r = strichartz_ratio(f, 1.0, 1.0, kInfinity, 2.0, graded_times(10.0, 16, 0.1));
  EXPECT_NEAR(r.ratio, 1.0, 1e-13);
}

TEST(Strichartz, Admissibility) {
  EXPECT_TRUE(admissible(4, 4));
  EXPECT_TRUE(admissible(3, 6));
  EXPECT_TRUE(admissible(kInfinity, 2));
  EXPECT_FALSE(admissible(2, kInfinity));
  EXPECT_FALSE(admissible(4, 3));
  const Grid g = packet_grid(1.0);
  EXPECT_THROW(strichartz_ratio(random_band_field(g, 0.5, 2.0, 1), 1.0, 1.0, 2.0, kInfinity, {0.0, 1.0}),
               ConfigError);
}

TEST(Strichartz, GradedTimes) {
  const auto t = graded_times(50.0, 5, 0.5);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[0], 0.0);
  EXPECT_NEAR(t[1], 0.5, 1e-15);
  EXPECT_NEAR(t[4], 50.0, 1e-12);
  EXPECT_NEAR(t[3] / t[2], t[2] / t[1], 1e-12);
}

TEST(Strichartz, RandomFieldsUniformlyBounded) {
  // ten random band-limited fields per band; the calibrated value is the
  // worst ratio at λ = 1, and no band may exceed twice it
  const auto times = graded_times(50.0, 48, 0.05);
  double calibrated = 0.0, worst = 0.0;
  for (double lam : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const Grid g = packet_grid(lam);
    double band = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Spectrum f = random_band_field(g, lam / 2, 2 * lam, 7000 + 17 * k + static_cast<int>(64 * lam));
      band = std::max(band, strichartz_ratio(f, lam, 1.0, 4.0, 4.0, times).ratio);
    }
    if (lam == 1.0) calibrated = band;
    worst = std::max(worst, band);
  }
  EXPECT_GT(calibrated, 0.0);
  EXPECT_LE(worst, 2.0 * calibrated);
}
