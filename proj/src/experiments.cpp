#include "wblab/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "wblab/duhamel.hpp"
#include "wblab/error.hpp"
#include "wblab/initial_data.hpp"
#include "wblab/picard.hpp"
#include "wblab/strichartz.hpp"

namespace wblab {

Grid packet_grid(double lambda, double min_length) {
  if (!(lambda > 0.0)) throw DomainError("packet band must be positive");
  const double length = std::max(min_length, 16.0 * M_PI / lambda);
  int n = 16;
  while (M_PI * n / length < 2.5 * lambda) n *= 2;
  return make_grid(n, length);
}

StrichartzRow strichartz_point(double lambda, double mu, const StrichartzSetup& setup) {
  if (setup.packets < 1) throw ConfigError("strichartz.packets must be >= 1");
  const Grid grid = packet_grid(lambda, setup.min_length);
  const auto times = graded_times(setup.T, setup.times, setup.first);
  StrichartzRow row;
  row.lambda = lambda;
  row.mu = mu;
  row.n = grid.n();
  row.length = grid.length();
  for (int j = 0; j < setup.packets; ++j) {
    const Spectrum f = localized_packet(grid, lambda, 1 + j % 4, setup.seed + static_cast<std::uint64_t>(j));
    const StrichartzResult r = strichartz_ratio(f, lambda, mu, setup.q, setup.r, times);
    row.bound = r.bound;
    row.norm = std::max(row.norm, r.norm / r.data);
    row.ratio = std::max(row.ratio, r.ratio);
  }
  return row;
}

std::array<BilinearRow, 2> bilinear_point(const DyadicTriple& triple, double mu, const BilinearSetup& setup) {
  triple.validate();
  if (setup.draws < 1) throw ConfigError("bilinear.draws must be >= 1");
  if (setup.snapshots < 3) throw ConfigError("bilinear.snapshots must be >= 3");
  const double lo = std::min({triple.lambda0, triple.lambda1, triple.lambda2});
  const Grid grid = make_grid(setup.n, 16.0 * M_PI / lo);
  // inputs must sit inside the retained (2/3) modes
  const double kept = 2.0 * M_PI / grid.length() * (setup.n / 3);
  if (2.0 * std::max(triple.lambda1, triple.lambda2) > kept) {
    throw ConfigError("grid.n too small for the input bands of this triple");
  }
  const SymbolTable table(grid, mu);
  const auto times = uniform_times(setup.T, setup.snapshots);
  const NormConfig cfg = NormConfig::from_alpha(setup.alpha, 0.0, mu);

  std::array<BilinearRow, 2> best;
  const BilinearVariant variants[2] = {BilinearVariant::C, BilinearVariant::C_tilde};
  for (int v = 0; v < 2; ++v) {
    best[v].triple = triple;
    best[v].mu = mu;
    best[v].variant = variants[v];
    best[v].n = setup.n;
    best[v].ratio = -1.0;
  }
  for (int d = 0; d < setup.draws; ++d) {
    const std::uint64_t s = setup.seed + 1000ULL * static_cast<std::uint64_t>(d);
    const SpectralSeries u = free_evolution(localized_packet(grid, triple.lambda1, 2 + d % 3, s), times, +1, table);
    const SpectralSeries w =
        free_evolution(localized_packet(grid, triple.lambda2, 3 - d % 3 + 1, s + 500), times, +1, table);
    const double xu = x_norm(u, triple.lambda1, cfg);
    const double xw = x_norm(w, triple.lambda2, cfg);
    if (xu == 0.0 || xw == 0.0) throw DegenerateInputError("X_lambda norm of a packet vanishes");
    for (int v = 0; v < 2; ++v) {
      const double c = bilinear_constant(triple, mu, setup.T, setup.alpha, variants[v]);
      const double cs = bilinear_constant(triple.swapped(), mu, setup.T, setup.alpha, variants[v]);
      const double a = bilinear_lhs(u, w, triple, mu, variants[v]);
      const double b = bilinear_lhs(w, u, triple.swapped(), mu, variants[v]);
      const BilinearRow ra{triple, mu, variants[v], setup.n, a, xu, xw, c, a / (c * xu * xw)};
      const BilinearRow rb{triple.swapped(), mu, variants[v], setup.n, b, xw, xu, cs, b / (cs * xu * xw)};
      for (const BilinearRow& r : {ra, rb}) {
        if (r.ratio > best[v].ratio) best[v] = r;
      }
    }
  }
  return best;
}

PhysicalState make_initial_data(const Grid& grid, double mu, double epsilon, double s, const DataSetup& data) {
  PhysicalState st = [&] {
    switch (data.kind) {
      case DataKind::gaussian:
        return gaussian_state(grid, mu, epsilon, data.amplitude, data.potential, data.width);
      case DataKind::random:
        return random_state(grid, mu, epsilon, data.kmin, data.kmax, data.seed);
      case DataKind::plane_wave:
        return plane_wave_state(grid, mu, epsilon, data.mode);
    }
    throw ConfigError("unknown data kind");
  }();
  if (data.D0 > 0.0) st = rescale_to(st, data.D0, s);
  return st;
}

LifespanRow lifespan_point(double mu, double epsilon, const LifespanSetup& setup) {
  const Grid grid = make_grid(setup.n, setup.length);
  const PhysicalState data = make_initial_data(grid, mu, epsilon, setup.s, setup.data);
  SolverConfig sc;
  sc.n = setup.n;
  sc.length = setup.length;
  sc.mu = mu;
  sc.epsilon = epsilon;
  sc.dt = setup.dt;
  sc.T = setup.T;
  sc.s = setup.s;
  sc.snapshot_stride = setup.snapshot_stride;
  sc.criterion = setup.criterion;
  sc.stop_on_lifespan = true;
  const Trajectory traj = simulate(sc, diagonalize(data));

  LifespanRow row;
  row.mu = mu;
  row.epsilon = epsilon;
  row.D0 = data_size(data, setup.s);
  row.lifespan = lifespan(traj, setup.criterion);
  const double h0 = traj.diagnostics.front().hs_norm;
  row.final_growth = traj.diagnostics.back().hs_norm / h0;
  for (const Diagnostics& d : traj.diagnostics) {
    if (!std::isfinite(d.hs_norm)) {
      row.fired = "nonfinite";
      break;
    }
    if (d.hs_norm > setup.criterion.growth_factor * h0) {
      row.fired = "doubling";
      break;
    }
    if (d.dealias_residual > setup.criterion.dealias_threshold) {
      row.fired = "dealias";
      break;
    }
  }
  if (row.fired == "none" && traj.blow_up_time) row.fired = "nonfinite";
  row.theory = theory_lifespan(row.D0, mu, epsilon, lifespan_delta(setup.alpha),
                               lifespan_constant_from_window(setup.window_c));
  return row;
}

ContractionRow contraction_point(double mu, double epsilon, double c, const ContractionSetup& setup, bool compare) {
  if (!(c > 0.0)) throw ConfigError("window constant c must be positive");
  const Grid grid = make_grid(setup.n, setup.length);
  const PhysicalState data =
      rescale_to(gaussian_state(grid, mu, epsilon, 1.0, 1.0, setup.width), setup.D0, setup.s);
  const DiagonalState f = diagonalize(data);

  ContractionRow row;
  row.mu = mu;
  row.epsilon = epsilon;
  row.c = c;
  row.T = c * std::pow(setup.D0, -2.0) * std::pow(mu, 1.5) / (epsilon * epsilon);
  PicardConfig pc;
  pc.snapshots = 2 * static_cast<int>(std::ceil(row.T / setup.spacing / 2.0)) + 1;
  pc.snapshots = std::max(pc.snapshots, 5);
  pc.norm = NormConfig::from_alpha(setup.alpha, setup.s, mu);
  const PicardResult res = picard_iterate(f, row.T, pc);
  row.snapshots = pc.snapshots;
  row.iterations = res.iterations;
  row.converged = res.converged && !res.diverged;
  row.residual = res.residual;
  for (double x : res.factors) row.max_factor = std::max(row.max_factor, x);
  row.hs_norm = sobolev_norm(res.plus.snapshots.back(), setup.s) + sobolev_norm(res.minus.snapshots.back(), setup.s);
  row.hs_gap = std::numeric_limits<double>::quiet_NaN();
  if (compare) {
    SolverConfig sc;
    sc.n = setup.n;
    sc.length = setup.length;
    sc.mu = mu;
    sc.epsilon = epsilon;
    sc.T = row.T;
    sc.dt = std::min(setup.max_dt, row.T / 200.0);
    sc.s = setup.s;
    sc.snapshot_stride = 1 << 30;
    const Trajectory traj = simulate(sc, f);
    const DiagonalState& end = traj.states.back();
    row.hs_gap = sobolev_norm(end.u_plus - res.plus.snapshots.back(), setup.s) +
                 sobolev_norm(end.u_minus - res.minus.snapshots.back(), setup.s);
  }
  return row;
}

double calibrate_window(const std::vector<double>& ladder, const ContractionSetup& setup, double target,
                        std::vector<ContractionRow>* trace) {
  double best = 0.0;
  for (double c : ladder) {
    const ContractionRow row = contraction_point(1.0, 1.0, c, setup, false);
    if (trace) trace->push_back(row);
    if (row.converged && row.max_factor < target) best = std::max(best, c);
  }
  return best;
}

}  // namespace wblab
