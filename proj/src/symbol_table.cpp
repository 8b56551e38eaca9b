#include "wblab/symbol_table.hpp"

#include <cmath>

#include "wblab/error.hpp"
#include "wblab/symbols.hpp"

namespace wblab {

SymbolTable::SymbolTable(const Grid& grid, double mu, double dealias_fraction)
    : grid_(grid), mu_(mu), dealias_fraction_(dealias_fraction) {
  if (!(mu > 0.0 && mu <= 1.0)) throw ConfigError("mu must lie in (0, 1]");
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 2.0 / 3.0 + 1e-12)) {
    throw ConfigError("dealias fraction must lie in (0, 2/3]");
  }
  const std::size_t size = grid.size();
  const auto r = grid.radius();
  const auto k1 = grid.xi1();
  const auto k2 = grid.xi2();
  const auto nyq = grid.nyquist();
  k_.resize(size);
  sqrt_k_.resize(size);
  inv_sqrt_k_.resize(size);
  m_.resize(size);
  dealias_.assign(size, 0.0);
  shell_.assign(size, 0.0);
  unit1_.assign(size, 0.0);
  unit2_.assign(size, 0.0);

  const int n = grid.n();
  const double cutoff = dealias_fraction * n / 2.0;
  for (std::size_t i = 0; i < size; ++i) {
    k_[i] = k_mu(mu, r[i]);
    sqrt_k_[i] = std::sqrt(k_[i]);
    inv_sqrt_k_[i] = 1.0 / sqrt_k_[i];
    m_[i] = r[i] * sqrt_k_[i];
    if (r[i] > 0.0 && !nyq[i]) {
      unit1_[i] = k1[i] / r[i];
      unit2_[i] = k2[i] / r[i];
    }
    const int i1 = static_cast<int>(i / n);
    const int i2 = static_cast<int>(i % n);
    const int j1 = std::abs(i1 < n / 2 ? i1 : i1 - n);
    const int j2 = std::abs(i2 < n / 2 ? i2 : i2 - n);
    const int jmax = std::max(j1, j2);
    if (jmax < cutoff - 1e-9) {
      dealias_[i] = 1.0;
      if (jmax > 0.75 * cutoff) shell_[i] = 1.0;
    }
  }
}

}  // namespace wblab
