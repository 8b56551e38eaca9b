#pragma once

#include <limits>
#include <span>
#include <vector>

#include "wblab/field.hpp"

namespace wblab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Parameters of the X^s_T contraction norm.
struct NormConfig {
  double s = 0.5;
  double q = kInfinity;
  double r = 2.0;
  double alpha = 0.1;
  double mu = 1.0;
  /// Dyadic truncation; both ≤ 0 means "full range of the grid".
  double lambda_min = 0.0;
  double lambda_max = 0.0;

  /// The pair 1/q = 1/2 − α, 1/r = α.
  static NormConfig from_alpha(double alpha, double s, double mu);
  /// Throws ConfigError for non-admissible (q, r) or μ ∉ (0, 1].
  void validate() const;
};

/// q > 2, r ≥ 2 and 1/r + 1/q = 1/2 (to 1e−12); q = ∞ allowed.
bool strichartz_admissible(double q, double r);

/// Time-stamped sequence of spectra of one scalar component.
struct SpectralSeries {
  std::vector<double> times;
  std::vector<Spectrum> snapshots;

  std::size_t size() const { return snapshots.size(); }
  double span() const { return times.empty() ? 0.0 : times.back() - times.front(); }
};

/// (∫|f|^p dx)^{1/p} by grid quadrature; p = ∞ is the max.
double lp_norm(const Grid& grid, std::span<const cplx> samples, double p);
double lp_norm(const Grid& grid, std::span<const double> samples, double p);
double lp_norm(const Spectrum& f, double p);

/// Lattice form (Σ_ξ ⟨ξ⟩^{2s}|f̂(ξ)|² · L²)^{1/2}. Requires s ∈ [−10, 10].
double sobolev_norm(const Spectrum& f, double s);
/// Dyadic form (Σ_λ ⟨λ⟩^{2s}‖P_λ f‖²)^{1/2} over the full range plus the mean.
double sobolev_norm_dyadic(const Spectrum& f, double s);

/// Trapezoidal quadrature of |g|^q over the sample times, then the 1/q root.
/// q = ∞ is the maximum.
double time_lq(std::span<const double> times, std::span<const double> values, double q);

/// ‖u‖_{L^q_T L^r_x} over the series. T must match the series span.
double spacetime_norm(const SpectralSeries& u, double q, double r, double T);

/// ‖u‖_{X_λ} = [‖P_λu‖²_{L^∞_T L²} + μ^{1/q}⟨√μλ⟩^{−3/q}‖P_λu‖²_{L^q_T L^r}]^{1/2};
/// for q = ∞ the two terms coincide and the term is counted once.
double x_norm(const SpectralSeries& u, double lambda, const NormConfig& config);

/// Components of x_norm, reported separately.
struct XNormParts {
  double energy;      // ‖P_λu‖_{L^∞_T L²}
  double strichartz;  // ‖P_λu‖_{L^q_T L^r}
  double total;
};
XNormParts x_norm_parts(const SpectralSeries& u, double lambda, const NormConfig& config);

/// ‖u‖_{X^s_T}: ⟨D⟩^s applied on the lattice, split by the square-normalized
/// dyadic windows (plus the zero mode), each piece measured in X_λ.
double xs_norm(const SpectralSeries& u, const NormConfig& config);

}  // namespace wblab
