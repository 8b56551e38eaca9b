#include "wblab/strichartz.hpp"

#include <cmath>

#include "wblab/duhamel.hpp"
#include "wblab/dynamics.hpp"
#include "wblab/error.hpp"
#include "wblab/operators.hpp"
#include "wblab/symbols.hpp"

namespace wblab {

namespace {

void require_pair(double q, double r) {
  if (!strichartz_admissible(q, r)) {
    throw ConfigError("(q, r) = (" + std::to_string(q) + ", " + std::to_string(r) + ") is not admissible");
  }
}

}  // namespace

double strichartz_bound(double lambda, double mu, double q) {
  if (std::isinf(q)) return 1.0;
  return std::pow(mu, -0.5 / q) * std::pow(bracket(std::sqrt(mu) * lambda), 1.5 / q);
}

std::vector<double> graded_times(double T, int count, double first) {
  if (count < 3 || !(T > first) || !(first > 0.0)) throw ConfigError("graded_times needs count >= 3, 0 < first < T");
  std::vector<double> t{0.0};
  const double ratio = std::pow(T / first, 1.0 / (count - 2));
  double x = first;
  for (int k = 1; k < count; ++k) {
    t.push_back(k + 1 == count ? T : x);
    x *= ratio;
  }
  return t;
}

StrichartzResult strichartz_ratio(const Spectrum& f, double lambda, double mu, double q, double r,
                                  const std::vector<double>& times) {
  require_pair(q, r);
  if (times.size() < 2 || times.front() != 0.0) throw StateError("Strichartz lattice must start at 0 with >= 2 times");
  const SymbolTable table(f.grid(), mu);
  const Spectrum fl = dyadic_project(f, lambda);
  const double data = fl.l2_norm();
  if (data == 0.0) throw DegenerateInputError("f has no content in the band");
  // streamed: a stored series at large n would not fit in memory
  std::vector<double> lr;
  lr.reserve(times.size());
  for (double t : times) lr.push_back(lp_norm(propagate_component(fl, t, +1, table.m()), r));
  const double norm = time_lq(times, lr, q);
  const double bound = strichartz_bound(lambda, mu, q);
  return {norm, data, bound, norm / (bound * data)};
}

StrichartzResult strichartz_inhomogeneous_ratio(const SpectralSeries& forcing, double lambda, double mu, double q,
                                                double r) {
  require_pair(q, r);
  if (forcing.size() < 3) throw StateError("forcing needs at least three snapshots");
  const SymbolTable table(forcing.snapshots.front().grid(), mu);
  SpectralSeries fl;
  fl.times = forcing.times;
  std::vector<double> l2;
  for (const auto& s : forcing.snapshots) {
    fl.snapshots.push_back(dyadic_project(s, lambda));
    l2.push_back(fl.snapshots.back().l2_norm());
  }
  const double data = time_lq(fl.times, l2, 1.0);
  if (data == 0.0) throw DegenerateInputError("forcing has no content in the band");
  const SpectralSeries duh = duhamel_integral(fl, +1, table);
  const double norm = spacetime_norm(duh, q, r, fl.span());
  const double bound = strichartz_bound(lambda, mu, q);
  return {norm, data, bound, norm / (bound * data)};
}

}  // namespace wblab
