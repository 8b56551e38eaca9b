#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace wblab {

struct KernelQuery {
  double lambda = 1.0;
  double mu = 1.0;
  double radius = 0.0;  // |x|
  double time = 0.0;

  /// Throws DomainError unless λ > 0, μ ∈ (0, 1], |x| ≥ 0, t ≥ 0.
  void validate() const;
};

struct KernelOptions {
  /// Panels per π of total phase variation (doubled in refinement checks).
  double node_density = 1.0;
  /// Tolerance relative to the t = 0 scale 2πλ²∫rβ.
  double relative_tolerance = 1e-10;
  std::size_t max_panels = 1u << 16;
};

struct KernelValue {
  std::complex<double> value;
  double error;  // absolute, same units as value
  std::size_t panels;
};

/// ∫_{1/2}^{2} r β(r) dr.
double beta_mass();

/// I_{λ,μ}(x, t) = 2πλ² ∫_{1/2}^{2} e^{itm_μ(λr)} J_0(λr|x|) r β(r) dr.
/// Throws ResolutionError if the phase needs more panels than allowed.
KernelValue kernel_I(const KernelQuery& query, const KernelOptions& options = {});

/// min(λ², μ^{−1/2}⟨√μλ⟩^{3/2}t^{−1}); λ² at t = 0.
double dispersive_bound(double lambda, double mu, double t);

/// Radii probed for sup_x|I|: 64 log-spaced points in [1e−2, 1e2]·⟨√μλ⟩^{−1/2}t,
/// |x| ≤ 1/λ, and a 1/(4λ)-spaced cover of the stationary ring
/// t·m_μ'(λr), r ∈ [1/2, 2] (with margins).
std::vector<double> decay_scan_radii(double lambda, double mu, double t);

struct DecayRow {
  double lambda;
  double mu;
  double t;
  double sup_abs_I;
  double argmax_radius;
  double theory_bound;
  double ratio;
};

/// sup over decay_scan_radii (refined locally around the best point) of |I|,
/// divided by dispersive_bound.
DecayRow dispersive_ratio(double lambda, double mu, double t, const KernelOptions& options = {});

/// |∫_a^b e^{itψ}g| / ((At)^{−1/2}[|g(b)| + ∫|g'|]); ∫|g'| is the total
/// variation of g on a fine sample. Throws DomainError for t ≤ 0.
double van_der_corput_ratio(const std::function<double(double)>& psi, const std::function<double(double)>& g,
                            double a, double b, double t, double A);

}  // namespace wblab
