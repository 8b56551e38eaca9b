#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wblab/estimates.hpp"
#include "wblab/integrator.hpp"

namespace wblab {

// Sweep points shared by the command-line driver and the acceptance suite.
// Each function evaluates one configuration; sweeps are loops over them.

/// Box and resolution for a packet at band λ: L = max(min_length, 16π/λ),
/// n the smallest power of two ≥ 16 with πn/L ≥ 2.5λ.
Grid packet_grid(double lambda, double min_length = 64.0);

struct StrichartzSetup {
  double q = 4.0;
  double r = 4.0;
  double T = 50.0;
  int times = 128;
  double first = 0.05;
  int packets = 2;
  double min_length = 64.0;
  std::uint64_t seed = 1000;
};

struct StrichartzRow {
  double lambda = 0.0;
  double mu = 0.0;
  int n = 0;
  double length = 0.0;
  double norm = 0.0;   // largest ‖Sf_λ‖_{L^q_T L^r} over the packets (unit data)
  double bound = 0.0;
  double ratio = 0.0;  // largest norm / (bound · data)
};

/// Localized packets with 1…4 point sources, free evolution on graded times.
StrichartzRow strichartz_point(double lambda, double mu, const StrichartzSetup& setup);

struct BilinearSetup {
  double T = 10.0;
  double alpha = 0.1;
  int n = 256;
  int snapshots = 33;
  int draws = 2;
  std::uint64_t seed = 11;
};

struct BilinearRow {
  DyadicTriple triple;
  double mu = 0.0;
  BilinearVariant variant = BilinearVariant::C;
  int n = 0;
  double lhs = 0.0;
  double x_u = 0.0;
  double x_v = 0.0;
  double constant = 0.0;
  double ratio = 0.0;
};

/// Free evolutions of localized packets at λ₁ and λ₂ on [0, T] in a box of side
/// 16π/min(λ₀, λ₁, λ₂). For each variant the row with the larger ratio over
/// both argument orders and all draws is returned (C first, then C̃).
std::array<BilinearRow, 2> bilinear_point(const DyadicTriple& triple, double mu, const BilinearSetup& setup);

enum class DataKind { gaussian, random, plane_wave };

struct DataSetup {
  DataKind kind = DataKind::gaussian;
  /// Rescaled so that data_size(·, s) = D0; D0 ≤ 0 keeps the raw amplitude.
  double D0 = 0.1;
  double amplitude = 1.0;
  double potential = 1.0;
  double width = 3.0;
  double kmin = 0.0;
  double kmax = 2.0;
  int mode = 1;
  std::uint64_t seed = 1;
};

PhysicalState make_initial_data(const Grid& grid, double mu, double epsilon, double s, const DataSetup& data);

struct LifespanSetup {
  int n = 128;
  double length = 64.0;
  double s = 1.5;
  double dt = 0.005;
  double T = 80.0;
  int snapshot_stride = 10;
  LifespanCriterion criterion{2.0, 1.0};
  DataSetup data{DataKind::plane_wave, 350.0};
  /// Contraction-window constant c; theory_lifespan uses C with (8C²)^{−2} = c.
  double window_c = 0.1;
  double alpha = 0.1;
};

struct LifespanRow {
  double mu = 0.0;
  double epsilon = 0.0;
  double D0 = 0.0;
  double lifespan = kNeverFired;
  /// "doubling", "dealias", "nonfinite" or "none".
  std::string fired = "none";
  double theory = 0.0;
  double final_growth = 0.0;  // last recorded H^s norm over the initial one
};

LifespanRow lifespan_point(double mu, double epsilon, const LifespanSetup& setup);

struct ContractionSetup {
  int n = 64;
  double length = 32.0;
  double D0 = 0.1;
  double s = 0.5;
  double width = 1.5;
  double alpha = 0.1;
  /// Target spacing of the Picard time lattice.
  double spacing = 0.08;
  /// ETDRK4 reference step is min(max_dt, T/200).
  double max_dt = 0.01;
};

struct ContractionRow {
  double mu = 0.0;
  double epsilon = 0.0;
  double c = 0.0;
  double T = 0.0;
  int snapshots = 0;
  int iterations = 0;
  bool converged = false;
  double max_factor = 0.0;
  double residual = 0.0;
  /// ‖u_± Picard − u_± ETDRK4‖_{H^s} at T (summed over ±); NaN if not compared.
  double hs_gap = 0.0;
  double hs_norm = 0.0;
};

/// Picard iteration at T = c·D₀^{−2}μ^{3/2}ε^{−2} from a Gaussian of size D₀,
/// optionally cross-checked against ETDRK4.
ContractionRow contraction_point(double mu, double epsilon, double c, const ContractionSetup& setup, bool compare);

/// Largest rung of `ladder` whose run at μ = ε = 1 converges with every
/// contraction factor below `target`. Returns 0 if none qualifies.
double calibrate_window(const std::vector<double>& ladder, const ContractionSetup& setup, double target,
                        std::vector<ContractionRow>* trace = nullptr);

}  // namespace wblab
