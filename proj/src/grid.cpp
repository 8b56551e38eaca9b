#include "wblab/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wblab/error.hpp"

namespace wblab {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int signed_index(int j, int n) { return j < n / 2 ? j : j - n; }

}  // namespace

Grid make_grid(int n, double length) {
  if (n < 8 || !is_power_of_two(n)) {
    std::ostringstream msg;
    msg << "grid.n must be a power of two >= 8, got " << n;
    throw ConfigError(msg.str());
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    std::ostringstream msg;
    msg << "grid.length must be positive and finite, got " << length;
    throw ConfigError(msg.str());
  }
  auto d = std::make_shared<Grid::Data>();
  d->n = n;
  d->length = length;
  const std::size_t total = static_cast<std::size_t>(n) * n;
  d->xi1.resize(total);
  d->xi2.resize(total);
  d->radius.resize(total);
  d->nyquist.resize(total);
  const double dk = 2.0 * std::numbers::pi / length;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const std::size_t idx = static_cast<std::size_t>(i1) * n + i2;
      const double k1 = dk * signed_index(i1, n);
      const double k2 = dk * signed_index(i2, n);
      d->xi1[idx] = k1;
      d->xi2[idx] = k2;
      d->radius[idx] = std::hypot(k1, k2);
      d->nyquist[idx] = (i1 == n / 2 || i2 == n / 2) ? 1 : 0;
    }
  }
  return Grid(std::move(d));
}

double Grid::axis_wavenumber(int j) const {
  return 2.0 * std::numbers::pi / length() * signed_index(j, n());
}

double Grid::min_wavenumber() const { return 2.0 * std::numbers::pi / length(); }

double Grid::max_radial_wavenumber() const {
  return std::sqrt(2.0) * std::numbers::pi * n() / length();
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << "grid mismatch: (n=" << a.n() << ", L=" << a.length() << ") vs (n=" << b.n()
        << ", L=" << b.length() << ")";
    throw ShapeError(msg.str());
  }
}

}  // namespace wblab
