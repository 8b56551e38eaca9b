#include "wblab/duhamel.hpp"

#include <cmath>

#include "wblab/dynamics.hpp"
#include "wblab/error.hpp"

namespace wblab {

namespace {

constexpr cplx kI{0.0, 1.0};

std::vector<cplx> to_grid(const std::vector<cplx>& c, int n) {
  std::vector<cplx> out(c.size());
  fft2_backward(n, c, out);
  return out;
}

Spectrum from_grid(const Grid& g, const std::vector<cplx>& z, std::span<const double> mask) {
  Spectrum s = Spectrum::from_physical(g, z);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= mask[i];
  return s;
}

// Physical samples of R_j√K_μ v (dealiased input), j = 1, 2.
std::pair<std::vector<cplx>, std::vector<cplx>> riesz_sqrt_k(const Spectrum& v, const SymbolTable& table) {
  const auto mask = table.dealias();
  const auto u1 = table.unit1();
  const auto u2 = table.unit2();
  const auto sk = table.sqrt_k();
  std::vector<cplx> a(v.size()), b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const cplx c = mask[i] * kI * sk[i] * v[i];
    a[i] = u1[i] * c;
    b[i] = u2[i] * c;
  }
  const int n = table.grid().n();
  return {to_grid(a, n), to_grid(b, n)};
}

}  // namespace

std::vector<double> uniform_times(double T, int count) {
  if (count < 2) throw ConfigError("time lattice needs at least two points");
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) t[static_cast<std::size_t>(k)] = T * k / (count - 1);
  return t;
}

std::vector<Spectrum> cumulative_simpson(const std::vector<double>& times, const std::vector<Spectrum>& values) {
  if (times.size() != values.size() || times.size() < 2) {
    throw ShapeError("cumulative_simpson needs matching times and values (>= 2)");
  }
  const std::size_t count = values.size();
  const Grid& g = values.front().grid();
  const double h = (times.back() - times.front()) / static_cast<double>(count - 1);
  std::vector<Spectrum> out(count, Spectrum(g));
  const std::size_t size = g.size();
  if (count == 2) {
    for (std::size_t i = 0; i < size; ++i) out[1][i] = 0.5 * h * (values[0][i] + values[1][i]);
    return out;
  }
  for (std::size_t k = 2; k < count; k += 2) {
    for (std::size_t i = 0; i < size; ++i) {
      out[k][i] = out[k - 2][i] + h / 3.0 * (values[k - 2][i] + 4.0 * values[k - 1][i] + values[k][i]);
    }
  }
  for (std::size_t k = 1; k < count; k += 2) {
    if (k == 1) {
      // quadratic through nodes 0, 1, 2 integrated over the first cell
      for (std::size_t i = 0; i < size; ++i) {
        out[1][i] = h / 12.0 * (5.0 * values[0][i] + 8.0 * values[1][i] - values[2][i]);
      }
    } else {
      for (std::size_t i = 0; i < size; ++i) {
        out[k][i] = out[k - 1][i] + h / 12.0 * (-values[k - 2][i] + 8.0 * values[k - 1][i] + 5.0 * values[k][i]);
      }
    }
  }
  return out;
}

SpectralSeries free_evolution(const Spectrum& f, const std::vector<double>& times, int sign,
                              const SymbolTable& table) {
  require_same_grid(f.grid(), table.grid());
  SpectralSeries out;
  out.times = times;
  out.snapshots.reserve(times.size());
  for (double t : times) out.snapshots.push_back(propagate_component(f, t, sign, table.m()));
  return out;
}

SpectralSeries duhamel_integral(const SpectralSeries& forcing, int sign, const SymbolTable& table) {
  if (forcing.size() < 2) throw StateError("Duhamel integral needs at least two snapshots");
  const auto m = table.m();
  std::vector<Spectrum> pulled;
  pulled.reserve(forcing.size());
  for (std::size_t k = 0; k < forcing.size(); ++k) {
    pulled.push_back(propagate_component(forcing.snapshots[k], -forcing.times[k], sign, m));
  }
  auto acc = cumulative_simpson(forcing.times, pulled);
  SpectralSeries out;
  out.times = forcing.times;
  out.snapshots.reserve(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    out.snapshots.push_back(propagate_component(acc[k], forcing.times[k], sign, m));
  }
  return out;
}

Spectrum bilinear_a(const Spectrum& u, const Spectrum& v, const SymbolTable& table) {
  const Grid& g = table.grid();
  require_same_grid(u.grid(), g);
  require_same_grid(v.grid(), g);
  const auto mask = table.dealias();
  std::vector<cplx> uc(u.coeffs().begin(), u.coeffs().end());
  for (std::size_t i = 0; i < uc.size(); ++i) uc[i] *= mask[i];
  const auto up = to_grid(uc, g.n());
  auto [a, b] = riesz_sqrt_k(v, table);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] *= up[i];
    b[i] *= up[i];
  }
  const Spectrum p1 = from_grid(g, a, mask);
  const Spectrum p2 = from_grid(g, b, mask);
  const auto kk = table.k();
  const auto r = table.abs();
  const auto u1 = table.unit1();
  const auto u2 = table.unit2();
  Spectrum out(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = kk[i] * r[i] * kI * (u1[i] * p1[i] + u2[i] * p2[i]);
  }
  return out;
}

Spectrum bilinear_b(const Spectrum& u, const Spectrum& v, const SymbolTable& table) {
  const Grid& g = table.grid();
  require_same_grid(u.grid(), g);
  require_same_grid(v.grid(), g);
  const auto mask = table.dealias();
  auto [a1, a2] = riesz_sqrt_k(u, table);
  const auto [b1, b2] = riesz_sqrt_k(v, table);
  for (std::size_t i = 0; i < a1.size(); ++i) a1[i] = a1[i] * b1[i] + a2[i] * b2[i];
  Spectrum out = from_grid(g, a1, mask);
  const auto sk = table.sqrt_k();
  const auto r = table.abs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= r[i] * sk[i];
  return out;
}

namespace {

template <class F>
SpectralSeries duhamel_bilinear(const SpectralSeries& u, const SpectralSeries& v, int sign, const SymbolTable& table,
                                F integrand) {
  if (u.size() != v.size()) throw ShapeError("bilinear Duhamel inputs need matching time lattices");
  SpectralSeries forcing;
  forcing.times = u.times;
  forcing.snapshots.reserve(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) forcing.snapshots.push_back(integrand(u.snapshots[k], v.snapshots[k], table));
  return duhamel_integral(forcing, sign, table);
}

}  // namespace

SpectralSeries duhamel_A(const SpectralSeries& u, const SpectralSeries& v, int sign, const SymbolTable& table) {
  return duhamel_bilinear(u, v, sign, table, bilinear_a);
}

SpectralSeries duhamel_B(const SpectralSeries& u, const SpectralSeries& v, int sign, const SymbolTable& table) {
  return duhamel_bilinear(u, v, sign, table, bilinear_b);
}

}  // namespace wblab
