#pragma once

#include <vector>

#include "wblab/integrator.hpp"
#include "wblab/norms.hpp"

namespace wblab {

struct PicardConfig {
  /// Time lattice size; must be odd (composite Simpson).
  int snapshots = 33;
  int max_iterations = 40;
  /// Stop once ‖u^{(k+1)} − u^{(k)}‖ ≤ tolerance·‖u^{(k+1)}‖ in X^s_T.
  double tolerance = 1e-12;
  /// Differences above divergence_limit·‖u^{(0)}‖ count as divergence.
  double divergence_limit = 1e6;
  double dealias_fraction = 2.0 / 3.0;
  NormConfig norm;
};

struct PicardResult {
  SpectralSeries plus;
  SpectralSeries minus;
  /// ‖u^{(k)} − u^{(k−1)}‖_{X^s_T}, k = 1, 2, …
  std::vector<double> differences;
  /// Successive ratios of differences above the round-off floor.
  std::vector<double> factors;
  int iterations = 0;
  bool converged = false;
  bool diverged = false;
  /// ‖Φ(u) − u‖ / ‖u‖ for the returned iterate u.
  double residual = 0.0;
};

/// ‖u_+‖_{X^s_T} + ‖u_−‖_{X^s_T}.
double pair_xs_norm(const SpectralSeries& plus, const SpectralSeries& minus, const NormConfig& config);

/// One application of the Duhamel map:
/// u_± ↦ S(±t)f_± − iε∫_0^t S(±(t−t'))N_±(u(t'))dt'.
std::pair<SpectralSeries, SpectralSeries> duhamel_map(const DiagonalState& f, const SpectralSeries& plus,
                                                      const SpectralSeries& minus, const SymbolTable& table);

/// Picard iteration from u^{(0)} = free evolution on [0, T].
PicardResult picard_iterate(const DiagonalState& f, double T, const PicardConfig& config);

/// Trajectory built from a converged Picard solution; snapshots every
/// stride·dt (rounded to an odd lattice).
Trajectory simulate_picard(const SolverConfig& config, const DiagonalState& initial);

}  // namespace wblab
