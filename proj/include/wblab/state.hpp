#pragma once

#include "wblab/field.hpp"
#include "wblab/symbol_table.hpp"

namespace wblab {

/// Surface elevation η and curl-free velocity v, with (μ, ε).
struct PhysicalState {
  ScalarField eta;
  VectorField v;
  double mu = 1.0;
  double epsilon = 1.0;

  const Grid& grid() const { return eta.grid(); }
};

/// Dispersive variables u_± = (η ∓ iK_μ^{−1/2}R·v)/2, kept in spectral form.
struct DiagonalState {
  Spectrum u_plus;
  Spectrum u_minus;
  double mu = 1.0;
  double epsilon = 1.0;

  const Grid& grid() const { return u_plus.grid(); }
};

/// Curl tolerance accepted by diagonalize (relative spectral curl).
inline constexpr double kCurlTolerance = 1e-10;
/// Pairing tolerance accepted by undiagonalize.
inline constexpr double kPairingTolerance = 1e-10;

/// Throws ConstraintError if v is not curl-free. Nyquist-line content is dropped.
DiagonalState diagonalize(const PhysicalState& state);
DiagonalState diagonalize(const PhysicalState& state, const SymbolTable& table);

/// η = u_+ + u_−, v = −i√K_μ R(u_+ − u_−). Throws ConstraintError when the
/// conjugate pairing u_−(ξ) = conj û_+(−ξ) fails (the result would not be real).
PhysicalState undiagonalize(const DiagonalState& state);
PhysicalState undiagonalize(const DiagonalState& state, const SymbolTable& table);

/// max_ξ |û_−(ξ) − conj û_+(−ξ)| relative to max |û_±|.
double pairing_residual(const DiagonalState& state);

DiagonalState operator+(const DiagonalState& a, const DiagonalState& b);
DiagonalState operator-(const DiagonalState& a, const DiagonalState& b);

}  // namespace wblab
