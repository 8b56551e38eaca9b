#include "wblab/initial_data.hpp"

#include <cmath>
#include <random>

#include "wblab/error.hpp"
#include "wblab/norms.hpp"
#include "wblab/operators.hpp"

namespace wblab {

namespace {

void scale(ScalarField& f, double a) {
  for (auto& v : f.values()) v *= a;
}

}  // namespace

PhysicalState gaussian_state(const Grid& grid, double mu, double epsilon, double amplitude, double potential,
                             double width) {
  if (!(width > 0.0)) throw ConfigError("gaussian width must be positive");
  const double c = 0.5 * grid.length();
  auto bump = [c, width](double x1, double x2) {
    const double r2 = (x1 - c) * (x1 - c) + (x2 - c) * (x2 - c);
    return std::exp(-r2 / (width * width));
  };
  ScalarField eta = ScalarField::from_function(grid, [&](double x1, double x2) { return amplitude * bump(x1, x2); });
  const ScalarField psi = ScalarField::from_function(grid, [&](double x1, double x2) { return potential * bump(x1, x2); });
  VectorField v = to_physical(gradient(psi.to_spectrum()));
  return {std::move(eta), std::move(v), mu, epsilon};
}

PhysicalState plane_wave_state(const Grid& grid, double mu, double epsilon, int mode) {
  if (mode < 1 || mode >= grid.n() / 3) throw ConfigError("plane wave mode must lie in [1, n/3)");
  const double k = 2.0 * M_PI * mode / grid.length();
  ScalarField eta = ScalarField::from_function(grid, [k](double x1, double) { return std::cos(k * x1); });
  const ScalarField psi = ScalarField::from_function(grid, [k](double x1, double) { return std::sin(k * x1) / k; });
  VectorField v = to_physical(gradient(psi.to_spectrum()));
  return {std::move(eta), std::move(v), mu, epsilon};
}

Spectrum random_band_field(const Grid& grid, double kmin, double kmax, std::uint64_t seed) {
  if (!(kmax >= kmin && kmin >= 0.0)) throw ConfigError("random band needs 0 <= kmin <= kmax");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Spectrum raw(grid);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = cplx(normal(gen), normal(gen));
  const auto r = grid.radius();
  const auto nyq = grid.nyquist();
  const int n = grid.n();
  Spectrum out(grid);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (nyq[i] || r[i] == 0.0 || r[i] < kmin || r[i] > kmax) continue;
    // (c(ξ) + conj c(−ξ))/√2 keeps unit variance
    out[i] = (raw[i] + std::conj(raw[mirror_index(n, i)])) / std::sqrt(2.0);
  }
  return out;
}

PhysicalState random_state(const Grid& grid, double mu, double epsilon, double kmin, double kmax,
                           std::uint64_t seed) {
  const Spectrum eta = random_band_field(grid, kmin, kmax, seed);
  const Spectrum psi = random_band_field(grid, kmin, kmax, seed ^ 0x9e3779b97f4a7c15ULL);
  return {ScalarField::from_spectrum(eta), to_physical(gradient(psi)), mu, epsilon};
}

Spectrum localized_packet(const Grid& grid, double lambda, int points, std::uint64_t seed) {
  if (points < 1) throw ConfigError("packet needs at least one source");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 2.0 / lambda);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double c = 0.5 * grid.length();
  const auto k1 = grid.xi1();
  const auto k2 = grid.xi2();
  const auto r = grid.radius();
  const auto nyq = grid.nyquist();
  Spectrum out(grid);
  for (int j = 0; j < points; ++j) {
    const double a = normal(gen);
    const double rho = radius(gen);
    const double th = angle(gen);
    const double x1 = c + rho * std::cos(th);
    const double x2 = c + rho * std::sin(th);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (nyq[i]) continue;
      const double b = bump_beta(r[i] / lambda);
      if (b == 0.0) continue;
      out[i] += a * b * std::polar(1.0, -(k1[i] * x1 + k2[i] * x2));
    }
  }
  const double norm = out.l2_norm();
  if (norm == 0.0) throw DegenerateInputError("packet has no resolved modes in the band");
  out *= 1.0 / norm;
  return out;
}

double data_size(const PhysicalState& state, double s) {
  const double e = sobolev_norm(state.eta.to_spectrum(), s);
  const double a = sobolev_norm(state.v.v1.to_spectrum(), s + 0.5);
  const double b = sobolev_norm(state.v.v2.to_spectrum(), s + 0.5);
  return e + std::sqrt(a * a + b * b);
}

PhysicalState rescale_to(const PhysicalState& state, double D0, double s) {
  const double now = data_size(state, s);
  if (now == 0.0) throw DegenerateInputError("cannot rescale a zero state");
  PhysicalState out = state;
  const double a = D0 / now;
  scale(out.eta, a);
  scale(out.v.v1, a);
  scale(out.v.v2, a);
  return out;
}

}  // namespace wblab
