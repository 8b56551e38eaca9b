#include "wblab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wblab/error.hpp"
#include "wblab/operators.hpp"
#include "wblab/symbols.hpp"

namespace wblab {

bool strichartz_admissible(double q, double r) {
  if (!(q > 2.0) || !(r >= 2.0)) return false;
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  return std::abs(inv_q + inv_r - 0.5) <= 1e-12;
}

NormConfig NormConfig::from_alpha(double alpha, double s, double mu) {
  NormConfig c;
  c.alpha = alpha;
  c.s = s;
  c.mu = mu;
  c.q = 1.0 / (0.5 - alpha);
  c.r = 1.0 / alpha;
  c.validate();
  return c;
}

void NormConfig::validate() const {
  if (!strichartz_admissible(q, r)) {
    std::ostringstream msg;
    msg << "(q, r) = (" << q << ", " << r << ") is not Strichartz admissible";
    throw ConfigError(msg.str());
  }
  if (!(mu > 0.0 && mu <= 1.0)) throw ConfigError("norm config: mu must lie in (0, 1]");
  if (!(alpha > 0.0 && alpha < 0.25)) throw ConfigError("norm config: alpha must lie in (0, 1/4)");
  if (!(s >= -10.0 && s <= 10.0)) throw ConfigError("norm config: s must lie in [-10, 10]");
}

namespace {

template <class T>
double lp_impl(const Grid& grid, std::span<const T> samples, double p) {
  if (samples.size() != grid.size()) throw ShapeError("sample count does not match grid");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : samples) m = std::max(m, static_cast<double>(std::abs(v)));
    return m;
  }
  if (!(p >= 1.0)) throw DomainError("lp_norm needs p >= 1");
  double sum = 0.0;
  if (p == 2.0) {
    for (const auto& v : samples) sum += std::norm(cplx(v));
  } else if (p == std::floor(p) && p <= 16.0) {
    const int k = static_cast<int>(p);
    for (const auto& v : samples) {
      const double a = std::abs(v);
      double t = 1.0;
      for (int j = 0; j < k; ++j) t *= a;
      sum += t;
    }
  } else {
    for (const auto& v : samples) sum += std::pow(static_cast<double>(std::abs(v)), p);
  }
  return std::pow(sum * grid.cell_measure(), 1.0 / p);
}

void require_series(const SpectralSeries& u) {
  if (u.snapshots.size() < 2 || u.times.size() != u.snapshots.size()) {
    throw StateError("trajectory needs at least two time-stamped snapshots");
  }
}

// Per-snapshot L² and L^r norms of a multiplied series.
struct BandNorms {
  std::vector<double> l2;
  std::vector<double> lr;
};

BandNorms band_norms(const SpectralSeries& u, std::span<const double> window, double r) {
  BandNorms out;
  out.l2.reserve(u.size());
  out.lr.reserve(u.size());
  for (const auto& snap : u.snapshots) {
    const Spectrum w = apply_multiplier(snap, window);
    out.l2.push_back(w.l2_norm());
    out.lr.push_back(r == 2.0 ? out.l2.back() : lp_norm(w, r));
  }
  return out;
}

double combine_x(const BandNorms& b, std::span<const double> times, double lambda, const NormConfig& c) {
  const double energy = time_lq(times, b.l2, kInfinity);
  if (std::isinf(c.q)) return energy;
  const double stri = time_lq(times, b.lr, c.q);
  const double weight = std::pow(c.mu, 1.0 / c.q) * std::pow(bracket(std::sqrt(c.mu) * lambda), -3.0 / c.q);
  return std::sqrt(energy * energy + weight * stri * stri);
}

}  // namespace

double lp_norm(const Grid& grid, std::span<const cplx> samples, double p) { return lp_impl(grid, samples, p); }

double lp_norm(const Grid& grid, std::span<const double> samples, double p) { return lp_impl(grid, samples, p); }

double lp_norm(const Spectrum& f, double p) {
  if (p == 2.0) return f.l2_norm();
  const auto z = f.physical();
  return lp_norm(f.grid(), std::span<const cplx>(z), p);
}

double sobolev_norm(const Spectrum& f, double s) {
  if (!(s >= -10.0 && s <= 10.0)) throw DomainError("sobolev_norm: s must lie in [-10, 10]");
  const auto r = f.grid().radius();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += std::pow(1.0 + r[i] * r[i], s) * std::norm(f[i]);
  return std::sqrt(sum * f.grid().area());
}

double sobolev_norm_dyadic(const Spectrum& f, double s) {
  if (!(s >= -10.0 && s <= 10.0)) throw DomainError("sobolev_norm_dyadic: s must lie in [-10, 10]");
  double sum = std::norm(f[0]) * f.grid().area();
  for (double lambda : full_dyadic_range(f.grid())) {
    const double band = apply_multiplier(f, symbol_dyadic(lambda)).l2_norm();
    sum += std::pow(1.0 + lambda * lambda, s) * band * band;
  }
  return std::sqrt(sum);
}

double time_lq(std::span<const double> times, std::span<const double> values, double q) {
  if (times.size() != values.size()) throw ShapeError("time_lq: size mismatch");
  if (values.empty()) throw StateError("time_lq: empty series");
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double a = std::pow(std::abs(values[i - 1]), q);
    const double b = std::pow(std::abs(values[i]), q);
    sum += 0.5 * (times[i] - times[i - 1]) * (a + b);
  }
  return std::pow(sum, 1.0 / q);
}

double spacetime_norm(const SpectralSeries& u, double q, double r, double T) {
  require_series(u);
  if (!strichartz_admissible(q, r)) {
    std::ostringstream msg;
    msg << "(q, r) = (" << q << ", " << r << ") is not Strichartz admissible";
    throw ConfigError(msg.str());
  }
  if (std::abs(u.span() - T) > 1e-9 * std::max(1.0, T)) {
    throw ConfigError("spacetime_norm: T does not match the trajectory span");
  }
  std::vector<double> lr;
  lr.reserve(u.size());
  for (const auto& snap : u.snapshots) lr.push_back(lp_norm(snap, r));
  return time_lq(u.times, lr, q);
}

XNormParts x_norm_parts(const SpectralSeries& u, double lambda, const NormConfig& config) {
  require_series(u);
  config.validate();
  const auto beta = symbol_dyadic(lambda).sample(u.snapshots.front().grid());
  const BandNorms b = band_norms(u, beta, config.r);
  XNormParts parts{};
  parts.energy = time_lq(u.times, b.l2, kInfinity);
  parts.strichartz = std::isinf(config.q) ? parts.energy : time_lq(u.times, b.lr, config.q);
  parts.total = combine_x(b, u.times, lambda, config);
  return parts;
}

double x_norm(const SpectralSeries& u, double lambda, const NormConfig& config) {
  return x_norm_parts(u, lambda, config).total;
}

double xs_norm(const SpectralSeries& u, const NormConfig& config) {
  require_series(u);
  config.validate();
  const Grid& grid = u.snapshots.front().grid();
  const auto weight = symbol_bracket(config.s).sample(grid);
  SpectralSeries weighted{u.times, {}};
  weighted.snapshots.reserve(u.size());
  for (const auto& snap : u.snapshots) weighted.snapshots.push_back(apply_multiplier(snap, weight));

  double total = 0.0;
  const bool truncated = config.lambda_min > 0.0 || config.lambda_max > 0.0;
  if (!truncated) {
    // zero mode: constant in space, its own band with ⟨√μ·0⟩ = 1
    std::vector<double> zero(grid.size(), 0.0);
    zero[0] = 1.0;
    total += std::pow(combine_x(band_norms(weighted, zero, config.r), u.times, 0.0, config), 2);
  }
  for (double lambda : full_dyadic_range(grid)) {
    if (config.lambda_min > 0.0 && lambda < config.lambda_min * (1.0 - 1e-12)) continue;
    if (config.lambda_max > 0.0 && lambda > config.lambda_max * (1.0 + 1e-12)) continue;
    const auto window = norm_window(grid, lambda);
    const double x = combine_x(band_norms(weighted, window, config.r), u.times, lambda, config);
    total += x * x;
  }
  return std::sqrt(total);
}

}  // namespace wblab
