#include "wblab/symbols.hpp"

#include <cmath>
#include <sstream>

#include "wblab/error.hpp"

namespace wblab {

namespace {

void require_mu(double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) {
    std::ostringstream msg;
    msg << "mu must lie in (0, 1], got " << mu;
    throw ConfigError(msg.str());
  }
}

// tanh(x)/x with its removable singularity.
double tanhc(double x) {
  if (x < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0;
  }
  return std::tanh(x) / x;
}

// m_1 = sqrt(x tanh x) and derivatives.
MDerivatives m1_derivatives(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return {x * (1.0 - x2 / 6.0 + 19.0 * x2 * x2 / 360.0 - 55.0 * x2 * x2 * x2 / 3024.0),
            1.0 - x2 / 2.0 + 95.0 * x2 * x2 / 360.0 - 385.0 * x2 * x2 * x2 / 3024.0,
            x * (-1.0 + 19.0 * x2 / 18.0 - 55.0 * x2 * x2 / 72.0)};
  }
  const double t = std::tanh(x);
  const double c = std::cosh(x);
  const double sech2 = 1.0 / (c * c);
  const double g = x * t;
  const double dg = t + x * sech2;
  const double d2g = 2.0 * sech2 * (1.0 - x * t);
  const double sg = std::sqrt(g);
  return {sg, dg / (2.0 * sg), (2.0 * g * d2g - dg * dg) / (4.0 * g * sg)};
}

}  // namespace

std::vector<double> RadialSymbol::sample(const Grid& grid) const {
  const auto r = grid.radius();
  std::vector<double> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = eval_(r[i]);
  return out;
}

double k_mu(double mu, double r) { return tanhc(std::sqrt(mu) * std::abs(r)); }

double m_mu(double mu, double r) {
  const double a = std::abs(r);
  return a * std::sqrt(k_mu(mu, a));
}

MDerivatives m_mu_derivatives(double mu, double r) {
  if (!(r > 0.0)) {
    std::ostringstream msg;
    msg << "m_mu derivatives need r > 0, got " << r;
    throw DomainError(msg.str());
  }
  require_mu(mu);
  const double sm = std::sqrt(mu);
  const MDerivatives d = m1_derivatives(sm * r);
  return {d.m / sm, d.dm, sm * d.d2m};
}

RadialSymbol symbol_k_mu(double mu) {
  require_mu(mu);
  return RadialSymbol("K_mu", [mu](double r) { return k_mu(mu, r); });
}

RadialSymbol symbol_sqrt_k_mu(double mu) {
  require_mu(mu);
  return RadialSymbol("sqrt_K_mu", [mu](double r) { return std::sqrt(k_mu(mu, r)); });
}

RadialSymbol symbol_inv_sqrt_k_mu(double mu) {
  require_mu(mu);
  return RadialSymbol("inv_sqrt_K_mu", [mu](double r) { return 1.0 / std::sqrt(k_mu(mu, r)); });
}

RadialSymbol symbol_m_mu(double mu) {
  require_mu(mu);
  return RadialSymbol("m_mu", [mu](double r) { return m_mu(mu, r); });
}

RadialSymbol symbol_bracket(double s) {
  return RadialSymbol("bracket", [s](double r) { return std::pow(1.0 + r * r, 0.5 * s); });
}

RadialSymbol symbol_abs_power(double p) {
  if (p < 0.0) throw DomainError("symbol_abs_power needs p >= 0");
  return RadialSymbol("abs_power", [p](double r) { return r == 0.0 ? 0.0 : std::pow(std::abs(r), p); });
}

double bump_chi(double s) {
  const double a = std::abs(s);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double up = std::exp(-1.0 / (2.0 - a));
  const double down = std::exp(-1.0 / (a - 1.0));
  return up / (up + down);
}

double bump_beta(double s) { return bump_chi(s) - bump_chi(2.0 * s); }

RadialSymbol symbol_dyadic(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("dyadic lambda must be positive");
  return RadialSymbol("beta_lambda", [lambda](double r) { return bump_beta(r / lambda); });
}

}  // namespace wblab
