#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wblab/duhamel.hpp"
#include "wblab/error.hpp"
#include "wblab/estimates.hpp"
#include "wblab/experiments.hpp"
#include "wblab/initial_data.hpp"
#include "wblab/symbol_table.hpp"
#include "wblab/symbols.hpp"

using namespace wblab;

namespace {

// the printed formula, evaluated independently
double c_formula(double l0, double l1, double l2, double mu, double T, double a, bool tilde) {
  auto br = [&](double l) { return std::sqrt(1.0 + mu * l * l); };
  const double mn = std::min(l1, l2);
  const double num = std::pow(T, a) * std::pow(mu, -0.25 + a / 2) * l0 * std::pow(mn, 2 * a) *
                     std::pow(br(mn), 0.75 - 1.5 * a);
  const double den = tilde ? std::sqrt(br(l0) * br(l1) * br(l2)) : br(l0) * std::sqrt(br(l2));
  return num / den;
}

}  // namespace

TEST(BilinearConstant, UnitTriple) {
  const DyadicTriple t{1, 1, 1};
  EXPECT_NEAR(bilinear_constant(t, 1.0, 1.0, 0.1, BilinearVariant::C), std::pow(2.0, -0.45), 1e-15);
  EXPECT_NEAR(bilinear_constant(t, 1.0, 1.0, 0.1, BilinearVariant::C_tilde), std::pow(2.0, -0.45), 1e-15);
}

TEST(BilinearConstant, MatchesFormulaAndScales) {
  for (double l0 : {0.25, 1.0, 4.0})
    for (double l1 : {0.5, 2.0, 8.0})
      for (double l2 : {0.5, 2.0, 8.0})
        for (double mu : {1.0, 0.1, 0.01}) {
          const DyadicTriple t{l0, l1, l2};
          const double c = bilinear_constant(t, mu, 3.0, 0.1, BilinearVariant::C);
          const double ct = bilinear_constant(t, mu, 3.0, 0.1, BilinearVariant::C_tilde);
          EXPECT_NEAR(c, c_formula(l0, l1, l2, mu, 3.0, 0.1, false), 1e-13 * c);
          EXPECT_NEAR(ct, c_formula(l0, l1, l2, mu, 3.0, 0.1, true), 1e-13 * ct);
          EXPECT_NEAR(bilinear_constant(t, mu, 6.0, 0.1, BilinearVariant::C) / c, std::pow(2.0, 0.1), 1e-14);
          if (l1 <= l2) {
            const double expect = std::sqrt(bracket(std::sqrt(mu) * l0) / bracket(std::sqrt(mu) * l1));
            EXPECT_NEAR(ct / c, expect, 1e-13 * expect);
          }
        }
}

TEST(DyadicTriple, Validation) {
  EXPECT_NO_THROW((DyadicTriple{0.25, 1, 8}.validate()));
  EXPECT_THROW((DyadicTriple{3, 1, 1}.validate()), DomainError);
  EXPECT_THROW((DyadicTriple{0, 1, 1}.validate()), DomainError);
  const DyadicTriple t{1, 2, 4};
  EXPECT_EQ(t.min12(), 2.0);
  EXPECT_EQ(t.swapped().lambda1, 4.0);
}

TEST(Bilinear, ZeroInputGivesZeroLhs) {
  const Grid g = make_grid(64, 32.0);
  const SymbolTable table(g, 1.0);
  const auto times = uniform_times(2.0, 9);
  const SpectralSeries u = free_evolution(localized_packet(g, 1.0, 2, 1), times, +1, table);
  const SpectralSeries zero = free_evolution(Spectrum(g), times, +1, table);
  for (auto v : {BilinearVariant::C, BilinearVariant::C_tilde})
    EXPECT_EQ(bilinear_lhs(u, zero, {1, 1, 1}, 1.0, v), 0.0);
  EXPECT_THROW(bilinear_ratio(u, zero, {1, 1, 1}, 1.0, 2.0, 0.1, BilinearVariant::C), DegenerateInputError);
}

TEST(Bilinear, IncompatibleTripleVanishes) {
  // inputs at 1 and 8 convolve into [6, 10]·(band edges), far from P_{1/4}
  const Grid g = make_grid(512, 16 * std::numbers::pi);
  const SymbolTable table(g, 1.0);
  const auto times = uniform_times(4.0, 9);
  const SpectralSeries u = free_evolution(localized_packet(g, 1.0, 2, 3), times, +1, table);
  const SpectralSeries v = free_evolution(localized_packet(g, 8.0, 2, 4), times, +1, table);
  for (auto var : {BilinearVariant::C, BilinearVariant::C_tilde}) {
    const auto m = bilinear_ratio(u, v, {0.25, 1, 8}, 1.0, 4.0, 0.1, var);
    EXPECT_LT(m.lhs, 1e-10 * m.x_u * m.x_v);
  }
}

TEST(Bilinear, BothOrdersReported) {
  BilinearSetup s;
  s.n = 128;
  s.snapshots = 9;
  s.draws = 1;
  const auto rows = bilinear_point({1, 1, 1}, 1.0, s);
  EXPECT_EQ(rows[0].variant, BilinearVariant::C);
  EXPECT_EQ(rows[1].variant, BilinearVariant::C_tilde);
  for (const auto& r : rows) {
    EXPECT_GT(r.ratio, 0.0);
    EXPECT_NEAR(r.ratio, r.lhs / (r.constant * r.x_u * r.x_v), 1e-12 * r.ratio);
  }
  s.n = 32;
  EXPECT_THROW(bilinear_point({1, 1, 8}, 1.0, s), ConfigError);
}

TEST(Aggregate, BoundedOverSweep) {
  // Duhamel operators A and B on random multi-band data, normalised by
  // T^{1/2+α}μ^{−3/4+α/2}‖u‖‖v‖; calibrated at μ = 1, T = 1
  const Grid g = make_grid(32, 16.0);
  double calibrated = 0.0, worst = 0.0;
  for (double mu : {1.0, 0.1, 0.01}) {
    const SymbolTable table(g, mu);
    for (double T : {1.0, 4.0, 16.0}) {
      const auto times = uniform_times(T, 17);
      const NormConfig cfg = NormConfig::from_alpha(0.1, 0.5, mu);
      for (int d = 0; d < 10; ++d) {
        const SpectralSeries u = free_evolution(random_band_field(g, 0.3, 3.0, 100 + d), times, +1, table);
        const SpectralSeries v = free_evolution(random_band_field(g, 0.3, 3.0, 200 + d), times, -1, table);
        for (auto op : {BilinearVariant::C, BilinearVariant::C_tilde}) {
          const double r = aggregate_ratio(u, v, +1, op, cfg);
          EXPECT_TRUE(std::isfinite(r));
          if (mu == 1.0 && T == 1.0) calibrated = std::max(calibrated, r);
          worst = std::max(worst, r);
        }
      }
    }
  }
  EXPECT_GT(calibrated, 0.0);
  EXPECT_LE(worst, 2.0 * calibrated) << "worst " << worst << " calibrated " << calibrated;
}

TEST(TheoryLifespan, Scalings) {
  const double d = lifespan_delta(0.1);
  EXPECT_NEAR(d, 0.4 / 1.2, 1e-15);
  const double C = lifespan_constant_from_window(0.1);
  EXPECT_NEAR(std::pow(8 * C * C, -2.0), 0.1, 1e-14);
  const double base = theory_lifespan(0.3, 0.5, 0.4, d, C);
  EXPECT_NEAR(theory_lifespan(0.3, 0.5, 0.2, d, C) / base, std::pow(2.0, 2 - d), 1e-12);
  EXPECT_NEAR(theory_lifespan(0.3, 0.25, 0.4, d, C) / base, std::pow(2.0, -1.5 + d), 1e-12);
  const double unit = theory_lifespan(1.0, 1.0, 1.0, d, C);
  EXPECT_GT(unit, 1e-2);
  EXPECT_LT(unit, 1e2);
  EXPECT_THROW(theory_lifespan(0.0, 1.0, 1.0, d, C), DomainError);
  EXPECT_THROW(theory_lifespan(1.0, 1.0, 1.0, 0.6, C), DomainError);
}

TEST(TheoryLifespan, Monotone) {
  const double d = lifespan_delta(0.1), C = 1.0;
  for (double x = 0.05; x < 1.0; x *= 1.5) {
    EXPECT_GT(theory_lifespan(x, 0.5, 0.5, d, C), theory_lifespan(x * 1.2, 0.5, 0.5, d, C));
    EXPECT_GT(theory_lifespan(0.5, 0.5, x, d, C), theory_lifespan(0.5, 0.5, x * 1.2, d, C));
    if (x * 1.2 <= 1.0) {
      EXPECT_LT(theory_lifespan(0.5, x, 0.5, d, C), theory_lifespan(0.5, x * 1.2, 0.5, d, C));
    }
  }
}

TEST(PowerLaw, ExactFits) {
  const auto f = fit_power_law({1, 2, 4, 8}, {3, 0.75, 0.1875, 0.046875});
  EXPECT_NEAR(f.slope, -2.0, 1e-14);
  EXPECT_NEAR(f.prefactor, 3.0, 1e-13);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
  std::vector<double> x{1, 3, 9, 27}, y;
  for (double v : x) y.push_back(std::sqrt(v));
  EXPECT_NEAR(fit_power_law(x, y).slope, 0.5, 1e-14);
  EXPECT_THROW(fit_power_law({1, 2}, {1, 2}), DomainError);
  EXPECT_THROW(fit_power_law({1, 2, 3}, {1, -2, 3}), DomainError);
}

TEST(PowerLaw, NoisyMonteCarlo) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> N;
  std::vector<double> x;
  for (int k = 0; k < 10; ++k) x.push_back(std::pow(10.0, k / 9.0));
  int inside = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> y;
    for (double v : x) y.push_back((1 + 0.05 * N(rng)) / v);
    if (std::abs(fit_power_law(x, y).slope + 1) <= 0.1) ++inside;
  }
  EXPECT_GE(inside, 95);
}
