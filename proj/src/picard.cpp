#include "wblab/picard.hpp"

#include <cmath>

#include "wblab/duhamel.hpp"
#include "wblab/dynamics.hpp"
#include "wblab/error.hpp"

namespace wblab {

namespace {

constexpr cplx kI{0.0, 1.0};

SpectralSeries difference(const SpectralSeries& a, const SpectralSeries& b) {
  SpectralSeries out;
  out.times = a.times;
  out.snapshots.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.snapshots.push_back(a.snapshots[k] - b.snapshots[k]);
  return out;
}

bool finite(const SpectralSeries& s) {
  for (const auto& snap : s.snapshots) {
    for (const auto& c : snap.coeffs()) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
  }
  return true;
}

// Round-off floor below which a difference carries no contraction information.
constexpr double kFloor = 1e-13;

}  // namespace

double pair_xs_norm(const SpectralSeries& plus, const SpectralSeries& minus, const NormConfig& config) {
  return xs_norm(plus, config) + xs_norm(minus, config);
}

std::pair<SpectralSeries, SpectralSeries> duhamel_map(const DiagonalState& f, const SpectralSeries& plus,
                                                      const SpectralSeries& minus, const SymbolTable& table) {
  if (plus.size() != minus.size() || plus.size() < 2) throw StateError("Duhamel map needs matching series (>= 2)");
  SpectralSeries fp{plus.times, {}};
  SpectralSeries fm{plus.times, {}};
  fp.snapshots.reserve(plus.size());
  fm.snapshots.reserve(plus.size());
  const cplx coeff = -kI * f.epsilon;
  for (std::size_t k = 0; k < plus.size(); ++k) {
    const DiagonalState uk{plus.snapshots[k], minus.snapshots[k], f.mu, f.epsilon};
    auto [np, nm] = nonlinearity(uk, table);
    np *= coeff;
    nm *= coeff;
    fp.snapshots.push_back(std::move(np));
    fm.snapshots.push_back(std::move(nm));
  }
  SpectralSeries ip = duhamel_integral(fp, +1, table);
  SpectralSeries im = duhamel_integral(fm, -1, table);
  const auto m = table.m();
  for (std::size_t k = 0; k < plus.size(); ++k) {
    ip.snapshots[k] += propagate_component(f.u_plus, plus.times[k], +1, m);
    im.snapshots[k] += propagate_component(f.u_minus, plus.times[k], -1, m);
  }
  return {std::move(ip), std::move(im)};
}

PicardResult picard_iterate(const DiagonalState& f, double T, const PicardConfig& config) {
  if (!(T > 0.0)) throw ConfigError("picard.T must be positive");
  if (config.snapshots < 3 || config.snapshots % 2 == 0) throw ConfigError("picard.snapshots must be odd and >= 3");
  if (config.max_iterations < 1) throw ConfigError("picard.max_iterations must be >= 1");
  NormConfig norm = config.norm;
  norm.mu = f.mu;
  norm.validate();
  const SymbolTable table(f.grid(), f.mu, config.dealias_fraction);
  const auto times = uniform_times(T, config.snapshots);

  PicardResult res;
  res.plus = free_evolution(f.u_plus, times, +1, table);
  res.minus = free_evolution(f.u_minus, times, -1, table);
  const double base = pair_xs_norm(res.plus, res.minus, norm);

  for (int k = 1; k <= config.max_iterations; ++k) {
    auto [np, nm] = duhamel_map(f, res.plus, res.minus, table);
    res.iterations = k;
    if (!finite(np) || !finite(nm)) {
      res.diverged = true;
      res.differences.push_back(std::numeric_limits<double>::infinity());
      return res;
    }
    const double diff = pair_xs_norm(difference(np, res.plus), difference(nm, res.minus), norm);
    const double size = pair_xs_norm(np, nm, norm);
    res.plus = std::move(np);
    res.minus = std::move(nm);
    if (!res.differences.empty() && res.differences.back() > kFloor * size) {
      res.factors.push_back(diff / res.differences.back());
    }
    res.differences.push_back(diff);
    if (diff > config.divergence_limit * std::max(base, 1e-300)) {
      res.diverged = true;
      return res;
    }
    if (diff <= config.tolerance * size) {
      res.converged = true;
      break;
    }
  }
  auto [rp, rm] = duhamel_map(f, res.plus, res.minus, table);
  const double size = pair_xs_norm(res.plus, res.minus, norm);
  const double gap = pair_xs_norm(difference(rp, res.plus), difference(rm, res.minus), norm);
  res.residual = size > 0.0 ? gap / size : gap;
  return res;
}

Trajectory simulate_picard(const SolverConfig& config, const DiagonalState& initial) {
  const double spacing = config.dt * config.snapshot_stride;
  int count = static_cast<int>(std::ceil(config.T / spacing - 1e-9)) + 1;
  if (count < 3) count = 3;
  if (count % 2 == 0) ++count;
  PicardConfig pc;
  pc.snapshots = count;
  pc.dealias_fraction = config.dealias_fraction;
  pc.norm = NormConfig::from_alpha(0.1, config.s, config.mu);
  const PicardResult res = picard_iterate(initial, config.T, pc);
  const SymbolTable table(initial.grid(), config.mu, config.dealias_fraction);
  Trajectory traj;
  traj.s = config.s;
  for (std::size_t k = 0; k < res.plus.size(); ++k) {
    DiagonalState st{res.plus.snapshots[k], res.minus.snapshots[k], config.mu, config.epsilon};
    traj.times.push_back(res.plus.times[k]);
    traj.diagnostics.push_back(diagnose(st, table, config.s));
    traj.states.push_back(std::move(st));
  }
  if (res.diverged) traj.blow_up_time = config.T;
  return traj;
}

}  // namespace wblab
