#pragma once

#include <vector>

#include "wblab/norms.hpp"
#include "wblab/symbol_table.hpp"

namespace wblab {

/// Cumulative composite Simpson integrals ∫_{t_0}^{t_k} f on a uniform time
/// lattice. Odd-indexed nodes close with the three-point end formula.
std::vector<Spectrum> cumulative_simpson(const std::vector<double>& times, const std::vector<Spectrum>& values);

/// Uniform lattice t_k = kT/(count−1).
std::vector<double> uniform_times(double T, int count);

/// S(±t)f at each time (sign = +1 gives e^{−itm_μ}).
SpectralSeries free_evolution(const Spectrum& f, const std::vector<double>& times, int sign,
                              const SymbolTable& table);

/// ∫_0^t S(±(t−t'))F(t')dt' on the series' own lattice.
SpectralSeries duhamel_integral(const SpectralSeries& forcing, int sign, const SymbolTable& table);

/// A^±(u, v)(t) = ∫_0^t S(±(t−t'))|D|K_μ R·(u R√K_μ v)(t')dt'.
SpectralSeries duhamel_A(const SpectralSeries& u, const SpectralSeries& v, int sign, const SymbolTable& table);
/// B^±(u, v)(t) = ∫_0^t S(±(t−t'))|D|√K_μ (R√K_μ u · R√K_μ v)(t')dt'.
SpectralSeries duhamel_B(const SpectralSeries& u, const SpectralSeries& v, int sign, const SymbolTable& table);

/// Pointwise-in-time integrands of A and B (products dealiased by the table).
Spectrum bilinear_a(const Spectrum& u, const Spectrum& v, const SymbolTable& table);
Spectrum bilinear_b(const Spectrum& u, const Spectrum& v, const SymbolTable& table);

}  // namespace wblab
