#include "wblab/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wblab/error.hpp"
#include "wblab/operators.hpp"

namespace wblab {

namespace {

constexpr cplx kI{0.0, 1.0};

// Curl, mean and Nyquist content of v relative to its spectral norm: anything
// the Riesz representation v = −i√K R(u_+ − u_−) cannot carry.
double gradient_defect(const SpectralVector& v) {
  const Grid& g = v.c1.grid();
  const auto k1 = g.xi1();
  const auto k2 = g.xi2();
  const auto r = g.radius();
  const auto nyq = g.nyquist();
  double bad = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < v.c1.size(); ++i) {
    const double amp = std::norm(v.c1[i]) + std::norm(v.c2[i]);
    norm += amp;
    if (r[i] == 0.0 || nyq[i]) {
      bad += amp;
    } else {
      bad += std::norm(k1[i] * v.c2[i] - k2[i] * v.c1[i]) / (r[i] * r[i]);
    }
  }
  return norm > 0.0 ? std::sqrt(bad / norm) : 0.0;
}

void require_params(double mu, double epsilon) {
  if (!(mu > 0.0 && mu <= 1.0)) throw ConfigError("mu must lie in (0, 1]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ConfigError("epsilon must lie in [0, 1]");
}

}  // namespace

DiagonalState diagonalize(const PhysicalState& state) {
  require_params(state.mu, state.epsilon);
  return diagonalize(state, SymbolTable(state.grid(), state.mu));
}

DiagonalState diagonalize(const PhysicalState& state, const SymbolTable& table) {
  require_same_grid(state.eta.grid(), table.grid());
  require_same_grid(state.v.v1.grid(), table.grid());
  const SpectralVector v = to_spectral(state.v);
  const double defect = gradient_defect(v);
  if (defect > kCurlTolerance) {
    std::ostringstream msg;
    msg << "velocity is not a periodic gradient: relative curl/mean residual " << defect;
    throw ConstraintError(msg.str());
  }
  const Spectrum eta = state.eta.to_spectrum();
  const auto u1 = table.unit1();
  const auto u2 = table.unit2();
  const auto isk = table.inv_sqrt_k();
  const auto nyq = table.grid().nyquist();
  DiagonalState out{Spectrum(table.grid()), Spectrum(table.grid()), state.mu, state.epsilon};
  for (std::size_t i = 0; i < eta.size(); ++i) {
    // a bare η mode on the Nyquist lines has no velocity partner and would not conserve energy
    if (nyq[i]) continue;
    const cplx rv = kI * (u1[i] * v.c1[i] + u2[i] * v.c2[i]);
    const cplx a = kI * isk[i] * rv;
    out.u_plus[i] = 0.5 * (eta[i] - a);
    out.u_minus[i] = 0.5 * (eta[i] + a);
  }
  return out;
}

PhysicalState undiagonalize(const DiagonalState& state) {
  require_params(state.mu, state.epsilon);
  return undiagonalize(state, SymbolTable(state.grid(), state.mu));
}

PhysicalState undiagonalize(const DiagonalState& state, const SymbolTable& table) {
  require_same_grid(state.u_plus.grid(), table.grid());
  require_same_grid(state.u_minus.grid(), table.grid());
  const double pairing = pairing_residual(state);
  if (pairing > kPairingTolerance) {
    std::ostringstream msg;
    msg << "u_- is not the conjugate partner of u_+: relative residual " << pairing;
    throw ConstraintError(msg.str());
  }
  const Grid& g = table.grid();
  const auto u1 = table.unit1();
  const auto u2 = table.unit2();
  const auto sk = table.sqrt_k();
  Spectrum eta(g);
  SpectralVector v{Spectrum(g), Spectrum(g)};
  for (std::size_t i = 0; i < eta.size(); ++i) {
    eta[i] = state.u_plus[i] + state.u_minus[i];
    // −i√K · (iξ/|ξ|) = √K ξ/|ξ|
    const cplx d = sk[i] * (state.u_plus[i] - state.u_minus[i]);
    v.c1[i] = u1[i] * d;
    v.c2[i] = u2[i] * d;
  }
  return {ScalarField::from_spectrum(eta), to_physical(v), state.mu, state.epsilon};
}

double pairing_residual(const DiagonalState& state) {
  const int n = state.grid().n();
  double worst = 0.0;
  for (std::size_t i = 0; i < state.u_plus.size(); ++i) {
    worst = std::max(worst, std::abs(state.u_minus[i] - std::conj(state.u_plus[mirror_index(n, i)])));
  }
  const double scale = std::max(state.u_plus.max_abs(), state.u_minus.max_abs());
  return scale > 0.0 ? worst / scale : 0.0;
}

DiagonalState operator+(const DiagonalState& a, const DiagonalState& b) {
  return {a.u_plus + b.u_plus, a.u_minus + b.u_minus, a.mu, a.epsilon};
}

DiagonalState operator-(const DiagonalState& a, const DiagonalState& b) {
  return {a.u_plus - b.u_plus, a.u_minus - b.u_minus, a.mu, a.epsilon};
}

}  // namespace wblab
