#pragma once

#include <span>
#include <vector>

#include "wblab/field.hpp"
#include "wblab/symbols.hpp"

namespace wblab {

/// Pointwise spectral multiplication by symbol(|ξ|).
Spectrum apply_multiplier(const Spectrum& f, const RadialSymbol& symbol);
ScalarField apply_multiplier(const ScalarField& f, const RadialSymbol& symbol);
/// Same, with lattice samples precomputed for f's grid.
Spectrum apply_multiplier(const Spectrum& f, std::span<const double> lattice_samples);

/// Riesz transform R = |D|^{-1}∇, symbol iξ/|ξ|; the mean and the Nyquist
/// lines are mapped to zero.
SpectralVector riesz(const Spectrum& f);
VectorField riesz(const ScalarField& f);
/// Contraction R·v = Σ_j R_j v_j. On mean-zero scalars R·(R f) = −f.
Spectrum riesz_divergence(const SpectralVector& v);
ScalarField riesz_divergence(const VectorField& v);
/// Adjoint R* = −R·, so that R*(R f) = f on mean-zero scalars.
ScalarField riesz_adjoint(const VectorField& v);

SpectralVector gradient(const Spectrum& f);
Spectrum divergence(const SpectralVector& v);
/// Spectral curl ξ₁v̂₂ − ξ₂v̂₁ relative to the field's spectral norm.
double curl_residual(const VectorField& v);

SpectralVector to_spectral(const VectorField& v);
VectorField to_physical(const SpectralVector& v);

/// Dyadic numbers λ = 2^j whose annuli [λ/2, 2λ] meet the lattice radii
/// (2π/L … √2πn/L); the family sums to one on every nonzero mode.
std::vector<double> full_dyadic_range(const Grid& grid);
/// Resolvable scales: dyadic λ within [4π/L, πn/(2L)].
std::vector<double> resolvable_dyadic_range(const Grid& grid);

/// Littlewood–Paley projection P_λ, symbol β(|ξ|/λ). Returns zeros (and logs a
/// warning) when λ is outside full_dyadic_range.
Spectrum dyadic_project(const Spectrum& f, double lambda);
ScalarField dyadic_project(const ScalarField& f, double lambda);

/// Square-normalized window w_λ = β_λ / (Σ_λ' β_λ'²)^{1/2}; Σ_λ w_λ² = 1 on
/// nonzero modes. Used by the X^s_T norm.
std::vector<double> norm_window(const Grid& grid, double lambda);

/// 1 where max(|j1|, |j2|) < n/3 (the 2/3 rule), else 0.
std::vector<double> dealias_mask(const Grid& grid);

}  // namespace wblab
