#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "wblab/fft.hpp"
#include "wblab/grid.hpp"

namespace wblab {

/// Fourier-series coefficients of a (possibly complex) field on a Grid:
/// f(x) = Σ_ξ c(ξ) e^{iξ·x}. Parseval reads ∫|f|² = L² Σ|c|².
class Spectrum {
 public:
  explicit Spectrum(Grid grid);
  Spectrum(Grid grid, std::vector<cplx> coeffs);

  static Spectrum from_physical(const Grid& grid, std::span<const cplx> samples);
  static Spectrum from_real(const Grid& grid, std::span<const double> samples);

  const Grid& grid() const { return grid_; }
  std::span<const cplx> coeffs() const { return c_; }
  std::span<cplx> coeffs() { return c_; }
  cplx operator[](std::size_t i) const { return c_[i]; }
  cplx& operator[](std::size_t i) { return c_[i]; }
  std::size_t size() const { return c_.size(); }

  std::vector<cplx> physical() const;
  /// Real part of the physical samples.
  std::vector<double> physical_real() const;

  double l2_norm() const;
  /// max |c(ξ)|.
  double max_abs() const;

  Spectrum& operator+=(const Spectrum& o);
  Spectrum& operator-=(const Spectrum& o);
  Spectrum& operator*=(cplx a);

 private:
  Grid grid_;
  std::vector<cplx> c_;
};

Spectrum operator+(Spectrum a, const Spectrum& b);
Spectrum operator-(Spectrum a, const Spectrum& b);
Spectrum operator*(cplx a, Spectrum b);

/// Index of −ξ for the mode at `index` (the Nyquist lines map to themselves).
std::size_t mirror_index(int n, std::size_t index);

/// max_ξ |c(−ξ) − conj c(ξ)| / max_ξ |c(ξ)|, zero for an exactly real field.
double conjugate_symmetry_residual(const Spectrum& s);

/// Real field sampled on the grid.
class ScalarField {
 public:
  explicit ScalarField(Grid grid);
  ScalarField(Grid grid, std::vector<double> values);

  static ScalarField from_function(const Grid& grid,
                                   const std::function<double(double, double)>& f);
  /// Inverse transform; imaginary parts are dropped.
  static ScalarField from_spectrum(const Spectrum& s);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return v_; }
  std::span<double> values() { return v_; }
  std::size_t size() const { return v_.size(); }

  Spectrum to_spectrum() const;
  double l2_norm() const;

 private:
  Grid grid_;
  std::vector<double> v_;
};

/// Real vector field (v₁, v₂).
struct VectorField {
  ScalarField v1;
  ScalarField v2;

  const Grid& grid() const { return v1.grid(); }
};

/// Spectral counterpart of VectorField, used for complex intermediate fields.
struct SpectralVector {
  Spectrum c1;
  Spectrum c2;
};

}  // namespace wblab
