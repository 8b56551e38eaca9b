#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace wblab {

struct QuadratureOptions {
  /// Equal-width panels laid down before adaptive refinement.
  std::size_t initial_panels = 8;
  double abs_tolerance = 1e-12;
  /// Refuses (ResolutionError) rather than exceed this many panels.
  std::size_t max_panels = 1u << 20;
};

struct QuadratureResult {
  std::complex<double> value;
  double error;
  std::size_t panels;
  std::size_t evaluations;
};

/// Adaptive Gauss–Kronrod (7/15) quadrature of a complex integrand on [a, b].
/// The error estimate is the summed |K15 − G7| over the final panels.
QuadratureResult integrate_gk15(const std::function<std::complex<double>(double)>& f, double a, double b,
                                const QuadratureOptions& options);

}  // namespace wblab
