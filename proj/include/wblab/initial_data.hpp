#pragma once

#include <cstdint>

#include "wblab/state.hpp"

namespace wblab {

/// η₀ = A e^{−|x−c|²/w²} and v₀ = ∇ψ with ψ = B e^{−|x−c|²/w²}, c the box centre.
/// ∇ψ is taken spectrally so v₀ is curl-free to round-off.
PhysicalState gaussian_state(const Grid& grid, double mu, double epsilon, double amplitude, double potential,
                             double width);

/// Real field with unit-variance complex Gaussian coefficients on the modes
/// kmin ≤ |ξ| ≤ kmax, conjugate-symmetrized; Nyquist lines and the mean are zero.
Spectrum random_band_field(const Grid& grid, double kmin, double kmax, std::uint64_t seed);

/// η₀ and the potential ψ drawn from random_band_field, v₀ = ∇ψ.
PhysicalState random_state(const Grid& grid, double mu, double epsilon, double kmin, double kmax,
                           std::uint64_t seed);

/// P_λ Σ_j a_j δ(x − x_j): `points` unit sources with Gaussian weights,
/// scattered within 2/λ of the box centre; normalized to unit L² norm.
Spectrum localized_packet(const Grid& grid, double lambda, int points, std::uint64_t seed);

/// Right-moving long wave along x₁: η₀ = cos(2πk x₁/L), v₀ = (cos(2πk x₁/L), 0),
/// i.e. v₀ = ∇ψ with ψ = sin(2πk x₁/L)·L/(2πk). Unit amplitude; rescale for size.
PhysicalState plane_wave_state(const Grid& grid, double mu, double epsilon, int mode = 1);

/// D₀ = ‖η‖_{H^s} + ‖v‖_{H^{s+1/2}}.
double data_size(const PhysicalState& state, double s);

/// Scales (η, v) so that data_size equals D0. Throws DegenerateInputError for a zero state.
PhysicalState rescale_to(const PhysicalState& state, double D0, double s);

}  // namespace wblab
