#pragma once

#include <span>
#include <vector>

#include "wblab/field.hpp"

namespace wblab {

/// Lattice samples of the multipliers the solver needs for one (grid, μ).
class SymbolTable {
 public:
  /// `dealias_fraction` is the kept share of each axis (2/3 rule by default).
  SymbolTable(const Grid& grid, double mu, double dealias_fraction = 2.0 / 3.0);

  const Grid& grid() const { return grid_; }
  double mu() const { return mu_; }
  double dealias_fraction() const { return dealias_fraction_; }

  std::span<const double> k() const { return k_; }
  std::span<const double> sqrt_k() const { return sqrt_k_; }
  std::span<const double> inv_sqrt_k() const { return inv_sqrt_k_; }
  std::span<const double> m() const { return m_; }
  std::span<const double> abs() const { return grid_.radius(); }
  /// 1 on retained modes, 0 on the dealiased shell.
  std::span<const double> dealias() const { return dealias_; }
  /// Retained modes whose largest index exceeds 3/4 of the cut-off.
  std::span<const double> outer_shell() const { return shell_; }
  /// ξ_j/|ξ| with the mean and Nyquist lines set to zero.
  std::span<const double> unit1() const { return unit1_; }
  std::span<const double> unit2() const { return unit2_; }

 private:
  Grid grid_;
  double mu_;
  double dealias_fraction_;
  std::vector<double> k_, sqrt_k_, inv_sqrt_k_, m_, dealias_, shell_, unit1_, unit2_;
};

}  // namespace wblab
