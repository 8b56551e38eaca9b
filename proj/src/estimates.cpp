#include "wblab/estimates.hpp"

#include <cmath>
#include <sstream>

#include "wblab/duhamel.hpp"
#include "wblab/error.hpp"
#include "wblab/operators.hpp"
#include "wblab/symbols.hpp"

namespace wblab {

namespace {

bool is_dyadic(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) return false;
  int e = 0;
  return std::frexp(x, &e) == 0.5;
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << x;
    throw DomainError(msg.str());
  }
}

}  // namespace

bool admissible(double q, double r) { return strichartz_admissible(q, r); }

void DyadicTriple::validate() const {
  if (!is_dyadic(lambda0) || !is_dyadic(lambda1) || !is_dyadic(lambda2)) {
    throw DomainError("dyadic triple entries must be positive powers of two");
  }
}

double bilinear_constant(const DyadicTriple& t, double mu, double T, double alpha, BilinearVariant variant) {
  t.validate();
  require_positive(T, "T");
  if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("mu must lie in (0, 1]");
  if (!(alpha > 0.0 && alpha < 0.25)) throw DomainError("alpha must lie in (0, 1/4)");
  const double sm = std::sqrt(mu);
  const double lo = t.min12();
  const double num = t.lambda0 * std::pow(lo, 2.0 * alpha) * std::pow(bracket(sm * lo), 0.75 - 1.5 * alpha);
  double den = 0.0;
  if (variant == BilinearVariant::C) {
    den = bracket(sm * t.lambda0) * std::sqrt(bracket(sm * t.lambda2));
  } else {
    den = std::sqrt(bracket(sm * t.lambda0) * bracket(sm * t.lambda1) * bracket(sm * t.lambda2));
  }
  return std::pow(T, alpha) * std::pow(mu, -0.25 + 0.5 * alpha) * num / den;
}

double bilinear_lhs(const SpectralSeries& u, const SpectralSeries& v, const DyadicTriple& triple, double mu,
                    BilinearVariant variant) {
  triple.validate();
  if (u.size() != v.size() || u.size() < 2) throw ShapeError("bilinear inputs need matching lattices (>= 2)");
  const Grid& grid = u.snapshots.front().grid();
  const SymbolTable table(grid, mu);
  const auto b0 = symbol_dyadic(triple.lambda0).sample(grid);
  const auto b1 = symbol_dyadic(triple.lambda1).sample(grid);
  const auto b2 = symbol_dyadic(triple.lambda2).sample(grid);
  std::vector<double> l2(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Spectrum a = apply_multiplier(u.snapshots[k], b1);
    const Spectrum b = apply_multiplier(v.snapshots[k], b2);
    const Spectrum p = variant == BilinearVariant::C ? bilinear_a(a, b, table) : bilinear_b(a, b, table);
    l2[k] = apply_multiplier(p, b0).l2_norm();
  }
  return time_lq(u.times, l2, 2.0);
}

BilinearMeasurement bilinear_ratio(const SpectralSeries& u, const SpectralSeries& v, const DyadicTriple& triple,
                                   double mu, double T, double alpha, BilinearVariant variant) {
  NormConfig cfg = NormConfig::from_alpha(alpha, 0.0, mu);
  const double xu = x_norm(u, triple.lambda1, cfg);
  const double xv = x_norm(v, triple.lambda2, cfg);
  if (xu == 0.0 || xv == 0.0) throw DegenerateInputError("X_lambda norm of an input vanishes");
  const double lhs = bilinear_lhs(u, v, triple, mu, variant);
  const double c = bilinear_constant(triple, mu, T, alpha, variant);
  return {lhs, xu, xv, c, lhs / (c * xu * xv)};
}

double aggregate_ratio(const SpectralSeries& u, const SpectralSeries& v, int sign, BilinearVariant op,
                       const NormConfig& config) {
  config.validate();
  const SymbolTable table(u.snapshots.front().grid(), config.mu);
  const SpectralSeries w = op == BilinearVariant::C ? duhamel_A(u, v, sign, table) : duhamel_B(u, v, sign, table);
  const double nu = xs_norm(u, config);
  const double nv = xs_norm(v, config);
  if (nu == 0.0 || nv == 0.0) throw DegenerateInputError("X^s_T norm of an input vanishes");
  const double T = u.span();
  const double scale = std::pow(T, 0.5 + config.alpha) * std::pow(config.mu, -0.75 + 0.5 * config.alpha);
  return xs_norm(w, config) / (scale * nu * nv);
}

double bernstein_ratio(const Spectrum& f, double lambda, double mu, double p, double r1, double r2) {
  const Grid& g = f.grid();
  const auto r = g.radius();
  const SymbolTable table(g, mu);
  const auto kk = table.k();
  Spectrum shaped = f;
  for (std::size_t i = 0; i < shaped.size(); ++i) {
    shaped[i] *= (r[i] == 0.0 ? 0.0 : std::pow(r[i], r1)) * std::pow(kk[i], r2);
  }
  const SpectralVector rv = riesz(shaped);
  const auto a = rv.c1.physical();
  const auto b = rv.c2.physical();
  std::vector<double> mag(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mag[i] = std::sqrt(std::norm(a[i]) + std::norm(b[i]));
  const double top = lp_norm(g, mag, p);
  const double bottom = std::pow(lambda, r1) * std::pow(bracket(std::sqrt(mu) * lambda), -r2) * lp_norm(f, p);
  if (bottom == 0.0) throw DegenerateInputError("Bernstein reference norm vanishes");
  return top / bottom;
}

double lifespan_delta(double alpha) { return 4.0 * alpha / (1.0 + 2.0 * alpha); }

double theory_lifespan(double D0, double mu, double epsilon, double delta, double C) {
  require_positive(D0, "D0");
  require_positive(mu, "mu");
  require_positive(epsilon, "epsilon");
  require_positive(C, "C");
  if (!(delta > 0.0 && delta < 0.5)) throw DomainError("delta must lie in (0, 1/2)");
  return std::pow(8.0 * C * C * D0, -2.0 + delta) * std::pow(mu, 1.5 - delta) * std::pow(epsilon, -2.0 + delta);
}

double lifespan_constant_from_window(double c) {
  require_positive(c, "c");
  return std::sqrt(1.0 / (8.0 * std::sqrt(c)));
}

ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ShapeError("fit needs matching x and y");
  if (x.size() < 3) throw DomainError("fit needs at least three samples");
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("fit samples must be strictly positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit needs at least two distinct x values");
  ScalingFit fit;
  fit.x = x;
  fit.y = y;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  fit.prefactor = std::exp(intercept);
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = ly[i] - (intercept + fit.slope * lx[i]);
    ss_res += e * e;
    ss_tot += (ly[i] - my) * (ly[i] - my);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace wblab
