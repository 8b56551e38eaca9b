#pragma once

#include <vector>

#include "wblab/norms.hpp"

namespace wblab {

/// μ^{−1/(2q)}⟨√μλ⟩^{3/(2q)}; 1 for q = ∞.
double strichartz_bound(double lambda, double mu, double q);

/// {0} followed by `count − 1` geometrically spaced times from first to T.
/// Resolves the initial concentration of a packet while reaching long times.
std::vector<double> graded_times(double T, int count, double first);

struct StrichartzResult {
  double norm;   // ‖S f_λ‖_{L^q_T L^r} (homogeneous) or of the Duhamel term
  double data;   // ‖f_λ‖_{L²} or ‖F_λ‖_{L¹_T L²}
  double bound;  // strichartz_bound
  double ratio;  // norm / (bound · data)
};

/// f_λ = P_λ f evolved by e^{−itm_μ(D)} on `times` (starting at 0).
/// Throws ConfigError for a non-admissible pair, DegenerateInputError if f_λ = 0.
StrichartzResult strichartz_ratio(const Spectrum& f, double lambda, double mu, double q, double r,
                                  const std::vector<double>& times);

/// Inhomogeneous form: ‖∫_0^t S(t−s)F_λ(s)ds‖_{L^q_T L^r} against
/// bound·‖F_λ‖_{L¹_T L²}; the forcing lives on a uniform odd lattice.
StrichartzResult strichartz_inhomogeneous_ratio(const SpectralSeries& forcing, double lambda, double mu, double q,
                                                double r);

}  // namespace wblab
