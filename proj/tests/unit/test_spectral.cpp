#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wblab/error.hpp"
#include "wblab/estimates.hpp"
#include "wblab/grid.hpp"
#include "wblab/initial_data.hpp"
#include "wblab/norms.hpp"
#include "wblab/operators.hpp"
#include "wblab/symbols.hpp"

using namespace wblab;
constexpr double kPi = std::numbers::pi;

TEST(Grid, UnitSpacingLattice) {
  const Grid g = make_grid(8, 2 * kPi);
  EXPECT_NEAR(g.min_wavenumber(), 1.0, 1e-15);
  double max_axis = 0.0;
  for (int j = 0; j < 8; ++j) max_axis = std::max(max_axis, std::abs(g.axis_wavenumber(j)));
  EXPECT_NEAR(max_axis, 4.0, 1e-14);
  EXPECT_NEAR(g.cell_measure(), std::pow(2 * kPi / 8, 2), 1e-15);
}

TEST(Grid, LargeBox) { EXPECT_NEAR(make_grid(128, 64 * kPi).min_wavenumber(), 1.0 / 32, 1e-16); }

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(make_grid(7, 1.0), ConfigError);
  EXPECT_THROW(make_grid(4, 1.0), ConfigError);
  EXPECT_THROW(make_grid(16, 0.0), ConfigError);
  EXPECT_THROW(make_grid(16, -1.0), ConfigError);
}

TEST(Symbols, KAtZeroAndOne) {
  const RadialSymbol k = symbol_k_mu(1.0);
  EXPECT_DOUBLE_EQ(k(0.0), 1.0);
  EXPECT_NEAR(k(1.0), 0.7615941559557649, 1e-14);
  EXPECT_NEAR(symbol_m_mu(1.0)(100.0), 10.0, 1e-12);
  EXPECT_DOUBLE_EQ(symbol_m_mu(0.3)(0.0), 0.0);
}

TEST(Symbols, RejectsBadMu) {
  EXPECT_THROW(symbol_k_mu(0.0), ConfigError);
  EXPECT_THROW(symbol_m_mu(-0.1), ConfigError);
  EXPECT_THROW(symbol_k_mu(1.5), ConfigError);
}

TEST(Symbols, KInUnitInterval) {
  for (double mu : {1.0, 0.1, 0.01, 1e-4})
    for (double r = 0.0; r < 1e4; r = r * 1.3 + 0.01) {
      const double v = k_mu(mu, r);
      EXPECT_GT(v, 0.0);
      EXPECT_LE(v, 1.0);
      EXPECT_NEAR(v, oracle::tanh_k(mu, r), 1e-14);
    }
}

TEST(Symbols, MDerivativeSignsAndFiniteDifferences) {
  for (double mu : {1.0, 0.5, 0.1, 0.01, 1e-3}) {
    for (double r = 1e-3; r <= 1e3; r *= 1.25) {
      const MDerivatives d = m_mu_derivatives(mu, r);
      EXPECT_GT(d.dm, 0.0) << mu << " " << r;
      EXPECT_LT(d.d2m, 0.0) << mu << " " << r;
      // oracle: central differences of the defining formula
      auto m = [&](double x) { return x * std::sqrt(oracle::tanh_k(mu, x)); };
      const double h = 1e-4 * r;
      const double fd1 = (m(r + h) - m(r - h)) / (2 * h);
      EXPECT_NEAR(d.m, m(r), 1e-13 * std::max(1.0, m(r)));
      EXPECT_NEAR(d.dm, fd1, 1e-7 * std::abs(fd1));
    }
  }
  EXPECT_THROW(m_mu_derivatives(1.0, 0.0), DomainError);
}

TEST(Symbols, SecondDerivativeFiniteDifference) {
  for (double mu : {1.0, 0.1}) {
    for (double r : {0.05, 0.3, 1.0, 4.0, 20.0}) {
      const double h = 1e-3 * r;
      const double fd2 = (m_mu_derivatives(mu, r + h).dm - m_mu_derivatives(mu, r - h).dm) / (2 * h);
      EXPECT_NEAR(m_mu_derivatives(mu, r).d2m, fd2, 1e-5 * std::abs(fd2));
    }
  }
}

TEST(Symbols, MPrimeBand) {
  double lo = 1e300, hi = 0.0;
  for (double r = 1e-3; r <= 1e3; r *= 1.02) {
    const double v = m_mu_derivatives(1.0, r).dm * std::sqrt(bracket(r));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_LT(hi / lo, 10.0);
}

TEST(Symbols, ScalingIdentity) {
  for (double mu : {0.5, 0.1, 0.01, 1e-3})
    for (double r = 1e-3; r <= 1e3; r *= 1.7) {
      const double lhs = m_mu(mu, r);
      const double rhs = m_mu(1.0, std::sqrt(mu) * r) / std::sqrt(mu);
      EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
    }
}

TEST(Symbols, BumpPartitionOfUnity) {
  const Grid g = make_grid(128, 64.0);
  const auto range = full_dyadic_range(g);
  for (double s : g.radius()) {
    if (s < 2 * range.front() || s > range.back() / 2) continue;
    double sum = 0.0;
    for (double l : range) sum += bump_beta(s / l);
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
  EXPECT_DOUBLE_EQ(bump_chi(0.5), 1.0);
  EXPECT_DOUBLE_EQ(bump_chi(2.0), 0.0);
  EXPECT_DOUBLE_EQ(bump_beta(0.5), 0.0);
  EXPECT_DOUBLE_EQ(bump_beta(2.0), 0.0);
}

namespace {

Spectrum cos_mode(const Grid& g, double amplitude) {
  return ScalarField::from_function(g, [&](double x1, double) { return amplitude * std::cos(x1); }).to_spectrum();
}

}  // namespace

TEST(Multiplier, IdentitySymbol) {
  const Grid g = make_grid(32, 2 * kPi);
  const Spectrum f = random_band_field(g, 0.0, 10.0, 3);
  const Spectrum h = apply_multiplier(f, RadialSymbol("one", [](double) { return 1.0; }));
  EXPECT_LT(oracle::rel_diff(h, f), 1e-14);
}

TEST(Multiplier, CosineUnderK) {
  const Grid g = make_grid(32, 2 * kPi);
  const ScalarField out = apply_multiplier(ScalarField::from_spectrum(cos_mode(g, 1.0)), symbol_k_mu(1.0));
  const ScalarField ref =
      ScalarField::from_function(g, [](double x1, double) { return std::tanh(1.0) * std::cos(x1); });
  EXPECT_LT(oracle::rel_diff(out.values(), ref.values()), 1e-14);
}

TEST(Multiplier, TransformRoundTrip) {
  const Grid g = make_grid(64, 10.0);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> N;
  std::vector<double> v(g.size());
  for (auto& x : v) x = N(rng);
  const ScalarField f(g, v);
  const ScalarField back = ScalarField::from_spectrum(f.to_spectrum());
  EXPECT_LT(oracle::rel_diff(back.values(), f.values()), 1e-13);
}

TEST(Multiplier, GridMismatch) {
  const Spectrum f(make_grid(16, 1.0));
  EXPECT_THROW(apply_multiplier(f, std::vector<double>(make_grid(32, 1.0).size(), 1.0)), ShapeError);
}

TEST(Riesz, Cosine) {
  const Grid g = make_grid(32, 2 * kPi);
  const VectorField r = riesz(ScalarField::from_spectrum(cos_mode(g, 1.0)));
  const ScalarField ref = ScalarField::from_function(g, [](double x1, double) { return -std::sin(x1); });
  EXPECT_LT(oracle::rel_diff(r.v1.values(), ref.values()), 1e-13);
  double m2 = 0.0;
  for (double x : r.v2.values()) m2 = std::max(m2, std::abs(x));
  EXPECT_LT(m2, 1e-14);
}

TEST(Riesz, AdjointInverse) {
  const Grid g = make_grid(32, 12.0);
  const ScalarField f = ScalarField::from_spectrum(random_band_field(g, 0.0, 6.0, 8));
  const ScalarField back = riesz_adjoint(riesz(f));
  EXPECT_LT(oracle::rel_diff(back.values(), f.values()), 1e-12);
  // the plain contraction flips the sign
  const ScalarField neg = riesz_divergence(riesz(f));
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(neg.values()[i], -f.values()[i], 1e-12);
}

TEST(Riesz, ConstantToZero) {
  const Grid g = make_grid(16, 5.0);
  const VectorField r = riesz(ScalarField(g, std::vector<double>(g.size(), 3.5)));
  for (double x : r.v1.values()) EXPECT_EQ(x, 0.0);
  for (double x : r.v2.values()) EXPECT_EQ(x, 0.0);
}

TEST(Dyadic, SumRecoversField) {
  const Grid g = make_grid(64, 20.0);
  const Spectrum f = random_band_field(g, 0.0, 100.0, 2);
  Spectrum sum(g);
  for (double l : full_dyadic_range(g)) sum += dyadic_project(f, l);
  EXPECT_LT(oracle::rel_diff(sum, f), 1e-10);
}

TEST(Dyadic, ExactBandMode) {
  // |ξ| = λ: β(1) = 1 and the neighbouring bands vanish there
  const Grid g = make_grid(32, 2 * kPi);
  const Spectrum f = cos_mode(g, 1.0);
  EXPECT_LT(oracle::rel_diff(dyadic_project(f, 1.0), f), 1e-15);
  Spectrum two = dyadic_project(f, 0.5);
  two += dyadic_project(f, 2.0);
  EXPECT_LT(two.l2_norm(), 1e-15);
}

TEST(Dyadic, DisjointBands) {
  const Grid g = make_grid(64, 20.0);
  const Spectrum f = random_band_field(g, 0.0, 100.0, 4);
  for (double l : {0.5, 1.0, 2.0}) {
    EXPECT_LT(dyadic_project(dyadic_project(f, l), 4 * l).l2_norm(), 1e-15 * f.l2_norm());
  }
}

TEST(Dyadic, OutOfRangeGivesZero) {
  const Grid g = make_grid(16, 10.0);
  const Spectrum f = random_band_field(g, 0.0, 3.0, 1);
  EXPECT_EQ(dyadic_project(f, 1024.0).l2_norm(), 0.0);
}

TEST(Dyadic, NormWindowSquaresSumToOne) {
  const Grid g = make_grid(32, 16.0);
  std::vector<double> sum(g.size(), 0.0);
  for (double l : full_dyadic_range(g)) {
    const auto w = norm_window(g, l);
    for (std::size_t i = 0; i < g.size(); ++i) sum[i] += w[i] * w[i];
  }
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_NEAR(sum[i], 1.0, 1e-12);
}

TEST(Sobolev, ParsevalCosine) {
  for (double L : {2 * kPi, 4 * kPi}) {
    const Grid g = make_grid(32, L);
    const double A = 1.7;
    const Spectrum f = ScalarField::from_function(g, [&](double x1, double) {
                         return A * std::cos(2 * kPi / L * x1);
                       }).to_spectrum();
    EXPECT_NEAR(std::pow(sobolev_norm(f, 0.0), 2), A * A * L * L / 2, 1e-11 * L * L);
    if (L == 2 * kPi) {
      for (double s : {-1.0, 0.5, 2.0}) EXPECT_NEAR(sobolev_norm(f, s), std::pow(2.0, s / 2) * sobolev_norm(f, 0.0), 1e-12);
    }
  }
}

TEST(Sobolev, DyadicEquivalence) {
  const Grid g = make_grid(64, 20.0);
  for (int k = 0; k < 20; ++k) {
    const Spectrum f = random_band_field(g, 0.3, 8.0, 100 + k);
    for (double s : {-1.0, 0.5, 1.0, 2.0}) {
      const double ratio = sobolev_norm_dyadic(f, s) / sobolev_norm(f, s);
      EXPECT_LE(ratio, std::pow(4.0, std::abs(s)));
      EXPECT_GE(ratio, std::pow(4.0, -std::abs(s)));
    }
  }
}

TEST(Sobolev, ParsevalRandomFields) {
  const Grid g = make_grid(32, 7.0);
  std::mt19937_64 rng(9);
  std::normal_distribution<double> N;
  for (int k = 0; k < 100; ++k) {
    std::vector<double> v(g.size());
    for (auto& x : v) x = N(rng);
    double quad = 0.0;
    for (double x : v) quad += x * x;
    quad *= g.cell_measure();
    const double spec = std::pow(sobolev_norm(Spectrum::from_real(g, v), 0.0), 2);
    EXPECT_NEAR(spec, quad, 1e-12 * quad);
  }
}

TEST(Sobolev, RangeCheck) {
  const Spectrum f(make_grid(16, 1.0));
  EXPECT_THROW(sobolev_norm(f, 11.0), DomainError);
}

TEST(Bernstein, BoundedAndStableUnderRefinement) {
  // the max ratio over the sweep is the recorded constant; refining the grid
  // at fixed box must not move it by 2×
  auto sweep = [](int n) {
    const Grid g = make_grid(n, 32.0);
    double worst = 0.0;
    int seed = 0;
    for (double l : resolvable_dyadic_range(make_grid(64, 32.0)))
      for (double mu : {1.0, 0.1, 0.01})
        for (double p : {2.0, 4.0})
          for (auto [r1, r2] : {std::pair{1.0, 1.0}, {0.0, 0.5}, {1.0, 0.5}}) {
            const Spectrum f = random_band_field(g, l / 2, 2 * l, 500 + seed++);
            worst = std::max(worst, bernstein_ratio(f, l, mu, p, r1, r2));
          }
    return worst;
  };
  const double coarse = sweep(64);
  const double fine = sweep(128);
  EXPECT_TRUE(std::isfinite(coarse));
  EXPECT_LT(std::max(coarse, fine) / std::min(coarse, fine), 2.0);
}

TEST(Dealias, MaskRule) {
  const Grid g = make_grid(32, 1.0);
  const auto mask = dealias_mask(g);
  const int n = g.n();
  for (int p1 = 0; p1 < n; ++p1)
    for (int p2 = 0; p2 < n; ++p2) {
      const int j = std::max(std::abs(oracle::signed_index(p1, n)), std::abs(oracle::signed_index(p2, n)));
      EXPECT_EQ(mask[p1 * n + p2], 3 * j < n ? 1.0 : 0.0);
    }
}
