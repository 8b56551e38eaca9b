#pragma once

#include <string>
#include <vector>

#include "wblab/norms.hpp"
#include "wblab/symbol_table.hpp"

namespace wblab {

/// Strichartz admissibility: q > 2, r ≥ 2, 1/q + 1/r = 1/2 (q = ∞ allowed).
bool admissible(double q, double r);

struct DyadicTriple {
  double lambda0 = 1.0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;

  double min12() const { return lambda1 < lambda2 ? lambda1 : lambda2; }
  DyadicTriple swapped() const { return {lambda0, lambda2, lambda1}; }
  /// Throws DomainError unless every entry is a positive power of two.
  void validate() const;
};

enum class BilinearVariant { C, C_tilde };

/// C_{μ,T}(λ) = T^α μ^{−1/4+α/2} λ₀(λ₁∧λ₂)^{2α}⟨√μ(λ₁∧λ₂)⟩^{3/4−3α/2} / (⟨√μλ₀⟩⟨√μλ₂⟩^{1/2});
/// C̃ replaces the denominator by Π_j ⟨√μλ_j⟩^{1/2}.
double bilinear_constant(const DyadicTriple& triple, double mu, double T, double alpha, BilinearVariant variant);

struct BilinearMeasurement {
  double lhs;       // ‖…‖_{L²_{T,x}}
  double x_u;       // ‖u‖_{X_{λ₁}}
  double x_v;       // ‖v‖_{X_{λ₂}}
  double constant;  // C or C̃
  double ratio;
};

/// Left side for C: ‖|D|K_μ P_{λ₀}R·(u_{λ₁}R√K_μ v_{λ₂})‖_{L²_{T,x}};
/// for C̃: ‖|D|√K_μ P_{λ₀}(R√K_μ u_{λ₁}·R√K_μ v_{λ₂})‖_{L²_{T,x}}.
/// Products are dealiased (2/3 rule). Throws DegenerateInputError when an
/// X_λ norm of the inputs vanishes.
BilinearMeasurement bilinear_ratio(const SpectralSeries& u, const SpectralSeries& v, const DyadicTriple& triple,
                                   double mu, double T, double alpha, BilinearVariant variant);

/// Only the left-hand side (no normalization).
double bilinear_lhs(const SpectralSeries& u, const SpectralSeries& v, const DyadicTriple& triple, double mu,
                    BilinearVariant variant);

/// ‖A^±(u,v)‖_{X^s_T} / (T^{1/2+α}μ^{−3/4+α/2}‖u‖_{X^s_T}‖v‖_{X^s_T}) (or B^±).
double aggregate_ratio(const SpectralSeries& u, const SpectralSeries& v, int sign, BilinearVariant op,
                       const NormConfig& config);

/// ‖|D|^{r₁}K_μ^{r₂}R f‖_{L^p} / (λ^{r₁}⟨√μλ⟩^{−r₂}‖f‖_{L^p}) for f band-limited to λ.
double bernstein_ratio(const Spectrum& f, double lambda, double mu, double p, double r1, double r2);

/// (8C²D₀)^{−2+δ} μ^{3/2−δ} ε^{−2+δ}. Throws DomainError for nonpositive
/// arguments or δ ∉ (0, 1/2).
double theory_lifespan(double D0, double mu, double epsilon, double delta, double C);

/// δ = 4α/(1 + 2α).
double lifespan_delta(double alpha);

/// Constant C in theory_lifespan matching a contraction window
/// T = c·D₀^{−2}μ^{3/2}ε^{−2}: (8C²)^{−2} = c.
double lifespan_constant_from_window(double c);

struct ScalingFit {
  std::vector<double> x;
  std::vector<double> y;
  double slope = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
};

/// Least squares line through (log x, log y). Needs ≥ 3 samples, all positive.
ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wblab
