#include "wblab/dynamics.hpp"

#include <cmath>

#include "wblab/error.hpp"
#include "wblab/operators.hpp"

namespace wblab {

namespace {

constexpr cplx kI{0.0, 1.0};

std::vector<cplx> masked_physical(const Spectrum& s, std::span<const double> mask) {
  std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= mask[i];
  std::vector<cplx> out(c.size());
  fft2_backward(s.grid().n(), c, out);
  return out;
}

Spectrum masked_spectrum(const Grid& g, std::span<const cplx> samples, std::span<const double> mask) {
  Spectrum s = Spectrum::from_physical(g, samples);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= mask[i];
  return s;
}

// Dealiased products of a physical state: P(ηv) and P(|v|²/2), using the
// dealiased parts of η and v as factors.
struct Products {
  SpectralVector flux;
  Spectrum half_v2;
};

Products physical_products(const Spectrum& eta, const SpectralVector& v, const SymbolTable& table) {
  const Grid& g = table.grid();
  const auto mask = table.dealias();
  const auto e = masked_physical(eta, mask);
  const auto a = masked_physical(v.c1, mask);
  const auto b = masked_physical(v.c2, mask);
  std::vector<cplx> p1(e.size()), p2(e.size()), q(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    p1[i] = e[i] * a[i];
    p2[i] = e[i] * b[i];
    q[i] = 0.5 * (a[i] * a[i] + b[i] * b[i]);
  }
  return {{masked_spectrum(g, p1, mask), masked_spectrum(g, p2, mask)}, masked_spectrum(g, q, mask)};
}

void check_table(const Grid& g, const SymbolTable& table) { require_same_grid(g, table.grid()); }

}  // namespace

std::pair<Spectrum, Spectrum> nonlinearity(const DiagonalState& state) {
  return nonlinearity(state, SymbolTable(state.grid(), state.mu));
}

std::pair<Spectrum, Spectrum> nonlinearity(const DiagonalState& state, const SymbolTable& table) {
  const Grid& g = table.grid();
  check_table(state.u_plus.grid(), table);
  check_table(state.u_minus.grid(), table);
  const auto mask = table.dealias();
  const auto u1 = table.unit1();
  const auto u2 = table.unit2();
  const auto sk = table.sqrt_k();
  const auto kk = table.k();
  const auto r = table.abs();
  const std::size_t size = g.size();

  std::vector<cplx> eta(size), w1(size), w2(size);
  for (std::size_t i = 0; i < size; ++i) {
    const cplx up = state.u_plus[i];
    const cplx um = state.u_minus[i];
    eta[i] = mask[i] * (up + um);
    const cplx rk = mask[i] * kI * sk[i] * (up - um);
    w1[i] = u1[i] * rk;
    w2[i] = u2[i] * rk;
  }
  std::vector<cplx> e(size), a(size), b(size);
  fft2_backward(g.n(), eta, e);
  fft2_backward(g.n(), w1, a);
  fft2_backward(g.n(), w2, b);
  for (std::size_t i = 0; i < size; ++i) {
    const cplx q = std::norm(a[i]) + std::norm(b[i]);
    a[i] *= e[i];
    b[i] *= e[i];
    e[i] = q;
  }
  const Spectrum p1 = masked_spectrum(g, a, mask);
  const Spectrum p2 = masked_spectrum(g, b, mask);
  const Spectrum w2sum = masked_spectrum(g, e, mask);

  Spectrum np(g), nm(g);
  for (std::size_t i = 0; i < size; ++i) {
    // −½|D|K R·(ηw) and ¼|D|√K |w|²
    const cplx first = -0.5 * kk[i] * r[i] * kI * (u1[i] * p1[i] + u2[i] * p2[i]);
    const cplx second = 0.25 * r[i] * sk[i] * w2sum[i];
    np[i] = first + second;
    nm[i] = first - second;
  }
  return {std::move(np), std::move(nm)};
}

std::pair<Spectrum, Spectrum> diagonal_rhs(const DiagonalState& state, const SymbolTable& table) {
  auto [np, nm] = nonlinearity(state, table);
  const auto m = table.m();
  const double eps = state.epsilon;
  for (std::size_t i = 0; i < np.size(); ++i) {
    np[i] = -kI * (m[i] * state.u_plus[i] + eps * np[i]);
    nm[i] = kI * m[i] * state.u_minus[i] - kI * eps * nm[i];
  }
  return {std::move(np), std::move(nm)};
}

PhysicalRhs physical_rhs(const PhysicalState& state, const SymbolTable& table) {
  check_table(state.grid(), table);
  const Grid& g = table.grid();
  const Spectrum eta = state.eta.to_spectrum();
  const SpectralVector v = to_spectral(state.v);
  const Products pr = physical_products(eta, v, table);
  const auto kk = table.k();
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  const auto nyq = g.nyquist();
  const double eps = state.epsilon;
  PhysicalRhs out{Spectrum(g), {Spectrum(g), Spectrum(g)}};
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (nyq[i]) continue;
    const cplx div_v = kI * (k1[i] * v.c1[i] + k2[i] * v.c2[i]);
    const cplx div_flux = kI * (k1[i] * pr.flux.c1[i] + k2[i] * pr.flux.c2[i]);
    out.eta[i] = -div_v - eps * kk[i] * div_flux;
    const cplx pot = kk[i] * (eta[i] + eps * pr.half_v2[i]);
    out.v.c1[i] = -kI * k1[i] * pot;
    out.v.c2[i] = -kI * k2[i] * pot;
  }
  return out;
}

PhysicalRhs boussinesq_rhs(const PhysicalState& state, const SymbolTable& table) {
  check_table(state.grid(), table);
  const Grid& g = table.grid();
  const Spectrum eta = state.eta.to_spectrum();
  const SpectralVector v = to_spectral(state.v);
  const Products pr = physical_products(eta, v, table);
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  const auto r = g.radius();
  const auto nyq = g.nyquist();
  const double eps = state.epsilon;
  const double mu = table.mu();
  PhysicalRhs out{Spectrum(g), {Spectrum(g), Spectrum(g)}};
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (nyq[i]) continue;
    const cplx div_v = kI * (k1[i] * v.c1[i] + k2[i] * v.c2[i]);
    const cplx div_flux = kI * (k1[i] * pr.flux.c1[i] + k2[i] * pr.flux.c2[i]);
    out.eta[i] = -div_v - eps * div_flux;
    const cplx pot = (1.0 - mu * r[i] * r[i] / 3.0) * eta[i] + eps * pr.half_v2[i];
    out.v.c1[i] = -kI * k1[i] * pot;
    out.v.c2[i] = -kI * k2[i] * pot;
  }
  return out;
}

PhysicalRhs undiagonalize_rhs(const std::pair<Spectrum, Spectrum>& d, const SymbolTable& table) {
  const Grid& g = table.grid();
  const auto u1 = table.unit1();
  const auto u2 = table.unit2();
  const auto sk = table.sqrt_k();
  PhysicalRhs out{Spectrum(g), {Spectrum(g), Spectrum(g)}};
  for (std::size_t i = 0; i < out.eta.size(); ++i) {
    out.eta[i] = d.first[i] + d.second[i];
    const cplx diff = sk[i] * (d.first[i] - d.second[i]);
    out.v.c1[i] = u1[i] * diff;
    out.v.c2[i] = u2[i] * diff;
  }
  return out;
}

double rhs_norm(const PhysicalRhs& rhs) {
  const double a = rhs.eta.l2_norm();
  const double b = rhs.v.c1.l2_norm();
  const double c = rhs.v.c2.l2_norm();
  return std::sqrt(a * a + b * b + c * c);
}

PhysicalRhs operator-(const PhysicalRhs& a, const PhysicalRhs& b) {
  return {a.eta - b.eta, {a.v.c1 - b.v.c1, a.v.c2 - b.v.c2}};
}

Spectrum propagate_component(const Spectrum& f, double t, int sign, std::span<const double> m) {
  if (m.size() != f.size()) throw ShapeError("symbol samples do not match grid");
  Spectrum out = f;
  const double s = sign >= 0 ? -t : t;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= std::polar(1.0, s * m[i]);
  return out;
}

DiagonalState propagate_linear(const DiagonalState& state, double t) {
  return propagate_linear(state, t, SymbolTable(state.grid(), state.mu));
}

DiagonalState propagate_linear(const DiagonalState& state, double t, const SymbolTable& table) {
  check_table(state.grid(), table);
  return {propagate_component(state.u_plus, t, +1, table.m()), propagate_component(state.u_minus, t, -1, table.m()),
          state.mu, state.epsilon};
}

double energy(const PhysicalState& state) { return energy(state, SymbolTable(state.grid(), state.mu)); }

double energy(const PhysicalState& state, const SymbolTable& table) {
  check_table(state.grid(), table);
  const Grid& g = table.grid();
  const Spectrum eta = state.eta.to_spectrum();
  const SpectralVector v = to_spectral(state.v);
  const auto kk = table.k();
  double quad = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    quad += std::norm(eta[i]) + (std::norm(v.c1[i]) + std::norm(v.c2[i])) / kk[i];
  }
  quad *= g.area();
  double cubic = 0.0;
  if (state.epsilon != 0.0) {
    const auto mask = table.dealias();
    const auto e = masked_physical(eta, mask);
    const auto a = masked_physical(v.c1, mask);
    const auto b = masked_physical(v.c2, mask);
    for (std::size_t i = 0; i < e.size(); ++i) {
      cubic += e[i].real() * (a[i].real() * a[i].real() + b[i].real() * b[i].real());
    }
    cubic *= g.cell_measure() * state.epsilon;
  }
  return 0.5 * (quad + cubic);
}

EnergyGradient energy_gradient(const PhysicalState& state, const SymbolTable& table) {
  check_table(state.grid(), table);
  const Grid& g = table.grid();
  const Spectrum eta = state.eta.to_spectrum();
  const SpectralVector v = to_spectral(state.v);
  const Products pr = physical_products(eta, v, table);
  const auto kk = table.k();
  const double eps = state.epsilon;
  EnergyGradient out{Spectrum(g), {Spectrum(g), Spectrum(g)}};
  for (std::size_t i = 0; i < eta.size(); ++i) {
    out.eta[i] = eta[i] + eps * pr.half_v2[i];
    out.v.c1[i] = v.c1[i] / kk[i] + eps * pr.flux.c1[i];
    out.v.c2[i] = v.c2[i] / kk[i] + eps * pr.flux.c2[i];
  }
  return out;
}

double hamiltonian_residual(const PhysicalState& state) {
  return hamiltonian_residual(state, SymbolTable(state.grid(), state.mu));
}

double hamiltonian_residual(const PhysicalState& state, const SymbolTable& table) {
  const PhysicalRhs direct = physical_rhs(state, table);
  const EnergyGradient grad = energy_gradient(state, table);
  const Grid& g = table.grid();
  const auto kk = table.k();
  // J_μ = −K_μ [[0, ∇·], [∇, 0]]
  Spectrum kdiv = divergence(grad.v);
  SpectralVector kgrad = gradient(grad.eta);
  PhysicalRhs structured{Spectrum(g), {Spectrum(g), Spectrum(g)}};
  for (std::size_t i = 0; i < kdiv.size(); ++i) {
    structured.eta[i] = -kk[i] * kdiv[i];
    structured.v.c1[i] = -kk[i] * kgrad.c1[i];
    structured.v.c2[i] = -kk[i] * kgrad.c2[i];
  }
  const double scale = rhs_norm(direct);
  const double gap = rhs_norm(direct - structured);
  if (scale == 0.0) return gap;
  return gap / scale;
}

DirectionalCheck energy_directional_check(const PhysicalState& state, const PhysicalState& direction, double h) {
  const SymbolTable table(state.grid(), state.mu);
  auto shifted = [&](double sgn) {
    PhysicalState s = state;
    auto add = [sgn, h](ScalarField& f, const ScalarField& d) {
      auto fv = f.values();
      const auto dv = d.values();
      for (std::size_t i = 0; i < fv.size(); ++i) fv[i] += sgn * h * dv[i];
    };
    add(s.eta, direction.eta);
    add(s.v.v1, direction.v.v1);
    add(s.v.v2, direction.v.v2);
    return s;
  };
  const double fd = (energy(shifted(1.0), table) - energy(shifted(-1.0), table)) / (2.0 * h);
  const EnergyGradient grad = energy_gradient(state, table);
  const Spectrum de = direction.eta.to_spectrum();
  const SpectralVector dv = to_spectral(direction.v);
  double analytic = 0.0;
  for (std::size_t i = 0; i < de.size(); ++i) {
    analytic += (std::conj(grad.eta[i]) * de[i] + std::conj(grad.v.c1[i]) * dv.c1[i] +
                 std::conj(grad.v.c2[i]) * dv.c2[i])
                    .real();
  }
  analytic *= state.grid().area();
  return {fd, analytic, std::abs(fd - analytic)};
}

}  // namespace wblab
