#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wblab/state.hpp"

namespace wblab {

/// Declared instability proxy used as the numerical lifespan.
struct LifespanCriterion {
  /// Fires when ‖u_+‖_{H^s} + ‖u_−‖_{H^s} exceeds growth_factor × its initial value.
  double growth_factor = 2.0;
  /// Fires when the outer-shell share of the weighted spectrum exceeds this.
  double dealias_threshold = 1e-3;
};

enum class Integrator { etdrk4, picard };

struct SolverConfig {
  int n = 128;
  double length = 64.0;
  double mu = 1.0;
  double epsilon = 1.0;
  double dt = 1e-3;
  double T = 1.0;
  double s = 0.5;
  double dealias_fraction = 2.0 / 3.0;
  /// Steps between stored snapshots.
  int snapshot_stride = 16;
  Integrator integrator = Integrator::etdrk4;
  LifespanCriterion criterion;
  /// Stop at the first snapshot where the criterion fires.
  bool stop_on_lifespan = false;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

struct Diagnostics {
  double hs_norm = 0.0;  // ‖u_+‖_{H^s} + ‖u_−‖_{H^s}
  double energy = 0.0;
  double dealias_residual = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DiagonalState> states;
  std::vector<Diagnostics> diagnostics;
  /// Time of the first non-finite value, if any.
  std::optional<double> blow_up_time;
  double s = 0.5;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
};

/// Sentinel returned by lifespan() when the criterion never fires.
inline constexpr double kNeverFired = std::numeric_limits<double>::infinity();

/// Snapshot diagnostics of a diagonal state at Sobolev index s.
Diagnostics diagnose(const DiagonalState& state, const SymbolTable& table, double s);

/// Share of Σ⟨ξ⟩^{2s}|û_±|² carried by the outer shell of the retained modes.
double dealias_residual(const DiagonalState& state, const SymbolTable& table, double s);

/// Exponential time differencing RK4 (Cox–Matthews / Kassam–Trefethen) for
/// ∂_t u_± = ∓i m_μ u_± − iεN_±, with the linear part integrated exactly.
class Etdrk4 {
 public:
  Etdrk4(const SymbolTable& table, double dt, double epsilon);

  DiagonalState step(const DiagonalState& state) const;
  double dt() const { return dt_; }

 private:
  struct Coefficients {
    std::vector<cplx> e, e2, q, f1, f2, f3;
  };
  Coefficients make(int sign) const;
  std::pair<Spectrum, Spectrum> forcing(const DiagonalState& state) const;

  SymbolTable table_;
  double dt_;
  double epsilon_;
  Coefficients plus_, minus_;
};

/// One ETDRK4 step of size dt.
DiagonalState step_etdrk4(const DiagonalState& state, double dt);

/// ETDRK4 integration to config.T. Non-finite values end the run and are
/// recorded as a blow-up time rather than thrown.
Trajectory simulate(const SolverConfig& config, const DiagonalState& initial);

/// First snapshot time at which the criterion fires; the blow-up time if the
/// run ended that way first; kNeverFired otherwise.
double lifespan(const Trajectory& trajectory, const LifespanCriterion& criterion);

/// φ-functions φ_k(z) = (e^z − Σ_{j<k} z^j/j!)/z^k for k = 1, 2, 3, by contour
/// averaging when |z| < 1.
cplx phi1(cplx z);
cplx phi2(cplx z);
cplx phi3(cplx z);

}  // namespace wblab
