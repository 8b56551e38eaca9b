#pragma once

#include <utility>

#include "wblab/state.hpp"

namespace wblab {

/// Right-hand side of the physical system, one value per unknown.
struct PhysicalRhs {
  Spectrum eta;
  SpectralVector v;
};

/// N_μ^± = −½|D|K_μR·{(u_+ + u_−)R√K_μ(u_+ − u_−)} ± ¼|D|√K_μ|R√K_μ(u_+ − u_−)|²,
/// products formed in physical space under the table's dealiasing rule.
/// With this sign, (i∂_t ∓ m_μ)u_± = εN_± is exactly the physical system.
std::pair<Spectrum, Spectrum> nonlinearity(const DiagonalState& state, const SymbolTable& table);
std::pair<Spectrum, Spectrum> nonlinearity(const DiagonalState& state);

/// ∂_t u_± = ∓i m_μ u_± − iε N_±.
std::pair<Spectrum, Spectrum> diagonal_rhs(const DiagonalState& state, const SymbolTable& table);

/// ∂_tη = −∇·v − εK∇·(ηv), ∂_tv = −K∇η − εK∇(|v|²/2), same dealiasing.
PhysicalRhs physical_rhs(const PhysicalState& state, const SymbolTable& table);
/// Boussinesq approximation: ∂_tη = −∇·v − ε∇·(ηv), ∂_tv = −∇η − (μ/3)Δ∇η − ε∇(|v|²/2).
PhysicalRhs boussinesq_rhs(const PhysicalState& state, const SymbolTable& table);
/// Maps a diagonal time derivative back to (∂_tη, ∂_tv).
PhysicalRhs undiagonalize_rhs(const std::pair<Spectrum, Spectrum>& d, const SymbolTable& table);
/// Combined L² norm of all three components.
double rhs_norm(const PhysicalRhs& rhs);
PhysicalRhs operator-(const PhysicalRhs& a, const PhysicalRhs& b);

/// S(±t): û_+ ← e^{−itm_μ}û_+, û_− ← e^{+itm_μ}û_−.
DiagonalState propagate_linear(const DiagonalState& state, double t);
DiagonalState propagate_linear(const DiagonalState& state, double t, const SymbolTable& table);
/// The scalar propagator e^{∓itm_μ(D)} on one component (sign = +1 for u_+).
Spectrum propagate_component(const Spectrum& f, double t, int sign, std::span<const double> m);

/// E = ½∫(η² + |K^{−1/2}v|² + εη|v|²).
double energy(const PhysicalState& state);
double energy(const PhysicalState& state, const SymbolTable& table);

/// δE/δη = η + ε|v|²/2 and δE/δv = K^{−1}v + εηv (products dealiased).
struct EnergyGradient {
  Spectrum eta;
  SpectralVector v;
};
EnergyGradient energy_gradient(const PhysicalState& state, const SymbolTable& table);

/// Relative L² gap between Eq.-(1) right-hand side and J_μ∇E evaluated
/// from the analytic variational derivative.
double hamiltonian_residual(const PhysicalState& state);
double hamiltonian_residual(const PhysicalState& state, const SymbolTable& table);

/// Central difference (E(s+hδ) − E(s−hδ))/(2h) against ⟨∇E, δ⟩.
struct DirectionalCheck {
  double finite_difference;
  double analytic;
  double abs_error;
};
DirectionalCheck energy_directional_check(const PhysicalState& state, const PhysicalState& direction, double h);

}  // namespace wblab
