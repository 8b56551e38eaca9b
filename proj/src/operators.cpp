#include "wblab/operators.hpp"

#include <cmath>
#include <iostream>

#include "wblab/error.hpp"

namespace wblab {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

Spectrum apply_multiplier(const Spectrum& f, std::span<const double> lattice_samples) {
  if (lattice_samples.size() != f.size()) throw ShapeError("multiplier samples do not match grid");
  Spectrum out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= lattice_samples[i];
  return out;
}

Spectrum apply_multiplier(const Spectrum& f, const RadialSymbol& symbol) {
  const auto r = f.grid().radius();
  Spectrum out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= symbol(r[i]);
  return out;
}

ScalarField apply_multiplier(const ScalarField& f, const RadialSymbol& symbol) {
  return ScalarField::from_spectrum(apply_multiplier(f.to_spectrum(), symbol));
}

SpectralVector riesz(const Spectrum& f) {
  const Grid& g = f.grid();
  const auto r = g.radius();
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  const auto nyq = g.nyquist();
  SpectralVector out{Spectrum(g), Spectrum(g)};
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (r[i] == 0.0 || nyq[i]) continue;
    out.c1[i] = kI * (k1[i] / r[i]) * f[i];
    out.c2[i] = kI * (k2[i] / r[i]) * f[i];
  }
  return out;
}

VectorField riesz(const ScalarField& f) { return to_physical(riesz(f.to_spectrum())); }

Spectrum riesz_divergence(const SpectralVector& v) {
  const Grid& g = v.c1.grid();
  require_same_grid(g, v.c2.grid());
  const auto r = g.radius();
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  const auto nyq = g.nyquist();
  Spectrum out(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (r[i] == 0.0 || nyq[i]) continue;
    out[i] = kI * (k1[i] * v.c1[i] + k2[i] * v.c2[i]) / r[i];
  }
  return out;
}

ScalarField riesz_divergence(const VectorField& v) {
  return ScalarField::from_spectrum(riesz_divergence(to_spectral(v)));
}

ScalarField riesz_adjoint(const VectorField& v) {
  Spectrum s = riesz_divergence(to_spectral(v));
  s *= -1.0;
  return ScalarField::from_spectrum(s);
}

SpectralVector gradient(const Spectrum& f) {
  const Grid& g = f.grid();
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  const auto nyq = g.nyquist();
  SpectralVector out{Spectrum(g), Spectrum(g)};
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (nyq[i]) continue;
    out.c1[i] = kI * k1[i] * f[i];
    out.c2[i] = kI * k2[i] * f[i];
  }
  return out;
}

Spectrum divergence(const SpectralVector& v) {
  const Grid& g = v.c1.grid();
  require_same_grid(g, v.c2.grid());
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  const auto nyq = g.nyquist();
  Spectrum out(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (nyq[i]) continue;
    out[i] = kI * (k1[i] * v.c1[i] + k2[i] * v.c2[i]);
  }
  return out;
}

double curl_residual(const VectorField& v) {
  const SpectralVector s = to_spectral(v);
  const Grid& g = s.c1.grid();
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  double curl = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < s.c1.size(); ++i) {
    curl += std::norm(k1[i] * s.c2[i] - k2[i] * s.c1[i]);
    norm += (k1[i] * k1[i] + k2[i] * k2[i]) * (std::norm(s.c1[i]) + std::norm(s.c2[i]));
  }
  return norm > 0.0 ? std::sqrt(curl / norm) : 0.0;
}

SpectralVector to_spectral(const VectorField& v) {
  require_same_grid(v.v1.grid(), v.v2.grid());
  return {v.v1.to_spectrum(), v.v2.to_spectrum()};
}

VectorField to_physical(const SpectralVector& v) {
  return {ScalarField::from_spectrum(v.c1), ScalarField::from_spectrum(v.c2)};
}

std::vector<double> full_dyadic_range(const Grid& grid) {
  const int lo = static_cast<int>(std::floor(std::log2(grid.min_wavenumber()) + 1e-12));
  const int hi = static_cast<int>(std::ceil(std::log2(grid.max_radial_wavenumber()) - 1e-12));
  std::vector<double> out;
  for (int j = lo; j <= hi; ++j) out.push_back(std::ldexp(1.0, j));
  return out;
}

std::vector<double> resolvable_dyadic_range(const Grid& grid) {
  const double lo = 2.0 * grid.min_wavenumber();
  const double hi = 0.25 * grid.max_radial_wavenumber() * std::sqrt(2.0);
  std::vector<double> out;
  const int jlo = static_cast<int>(std::ceil(std::log2(lo) - 1e-12));
  const int jhi = static_cast<int>(std::floor(std::log2(hi) + 1e-12));
  for (int j = jlo; j <= jhi; ++j) out.push_back(std::ldexp(1.0, j));
  return out;
}

Spectrum dyadic_project(const Spectrum& f, double lambda) {
  const auto range = full_dyadic_range(f.grid());
  if (!(lambda >= range.front() * (1.0 - 1e-12) && lambda <= range.back() * (1.0 + 1e-12))) {
    std::cerr << "warning: dyadic band " << lambda << " outside [" << range.front() << ", " << range.back()
              << "], returning zero field\n";
    return Spectrum(f.grid());
  }
  return apply_multiplier(f, symbol_dyadic(lambda));
}

ScalarField dyadic_project(const ScalarField& f, double lambda) {
  return ScalarField::from_spectrum(dyadic_project(f.to_spectrum(), lambda));
}

std::vector<double> norm_window(const Grid& grid, double lambda) {
  const auto range = full_dyadic_range(grid);
  const auto r = grid.radius();
  std::vector<double> out(r.size(), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0.0) continue;
    const double b = bump_beta(r[i] / lambda);
    if (b == 0.0) continue;
    double den = 0.0;
    for (double l : range) {
      const double bl = bump_beta(r[i] / l);
      den += bl * bl;
    }
    out[i] = b / std::sqrt(den);
  }
  return out;
}

std::vector<double> dealias_mask(const Grid& grid) {
  const int n = grid.n();
  std::vector<double> mask(grid.size(), 0.0);
  auto keep = [n](int j) {
    const int s = j < n / 2 ? j : j - n;
    return 3 * std::abs(s) < n;
  };
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      if (keep(i1) && keep(i2)) mask[static_cast<std::size_t>(i1) * n + i2] = 1.0;
    }
  }
  return mask;
}

}  // namespace wblab
