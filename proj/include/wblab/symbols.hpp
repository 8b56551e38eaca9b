#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "wblab/grid.hpp"

namespace wblab {

/// Radial Fourier multiplier r ↦ m(r), r = |ξ| ≥ 0. Removable singularities
/// at r = 0 are resolved by the evaluator itself.
class RadialSymbol {
 public:
  RadialSymbol(std::string name, std::function<double(double)> evaluator)
      : name_(std::move(name)), eval_(std::move(evaluator)) {}

  double operator()(double r) const { return eval_(r); }
  const std::string& name() const { return name_; }
  /// Values at every lattice point of `grid`, in flat-index order.
  std::vector<double> sample(const Grid& grid) const;

 private:
  std::string name_;
  std::function<double(double)> eval_;
};

// Scalar evaluators. All take μ ∈ (0, 1] unchecked; the symbol factories validate.
double k_mu(double mu, double r);
double m_mu(double mu, double r);

struct MDerivatives {
  double m;
  double dm;
  double d2m;
};
/// m_μ and its first two derivatives in closed form; throws DomainError for r ≤ 0.
MDerivatives m_mu_derivatives(double mu, double r);

/// K_μ(D) = tanh(√μ|D|)/(√μ|D|), K_μ(0) = 1. Throws ConfigError for μ ∉ (0, 1].
RadialSymbol symbol_k_mu(double mu);
RadialSymbol symbol_sqrt_k_mu(double mu);
RadialSymbol symbol_inv_sqrt_k_mu(double mu);
/// m_μ(D) = |D|√K_μ(D), m_μ(0) = 0.
RadialSymbol symbol_m_mu(double mu);
/// ⟨r⟩^s = (1 + r²)^{s/2}.
RadialSymbol symbol_bracket(double s);
/// |r|^p with 0^p := 0 (p ≥ 0 only).
RadialSymbol symbol_abs_power(double p);

/// Smooth cut-off: 1 on |s| ≤ 1, 0 on |s| ≥ 2.
double bump_chi(double s);
/// Annulus bump β(s) = χ(s) − χ(2s), supported in 1/2 ≤ |s| ≤ 2.
double bump_beta(double s);
/// β_λ(r) = β(r/λ).
RadialSymbol symbol_dyadic(double lambda);

/// ⟨x⟩ = (1 + x²)^{1/2}.
inline double bracket(double x) { return std::sqrt(1.0 + x * x); }

}  // namespace wblab
