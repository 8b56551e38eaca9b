#include "wblab/integrator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wblab/dynamics.hpp"
#include "wblab/error.hpp"
#include "wblab/norms.hpp"
#include "wblab/picard.hpp"

namespace wblab {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr int kContourPoints = 32;

void fail(const std::string& key, const std::string& why) {
  throw ConfigError("solver." + key + ": " + why);
}

template <class F>
cplx contour_mean(cplx z, F direct) {
  if (std::abs(z) >= 0.5) return direct(z);
  cplx sum = 0.0;
  for (int j = 0; j < kContourPoints; ++j) {
    const double theta = 2.0 * std::numbers::pi * (j + 0.5) / kContourPoints;
    sum += direct(z + std::polar(1.0, theta));
  }
  return sum / static_cast<double>(kContourPoints);
}

bool finite(const Spectrum& s) {
  for (const auto& c : s.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

cplx phi1(cplx z) {
  return contour_mean(z, [](cplx w) { return (std::exp(w) - 1.0) / w; });
}

cplx phi2(cplx z) {
  return contour_mean(z, [](cplx w) { return (std::exp(w) - 1.0 - w) / (w * w); });
}

cplx phi3(cplx z) {
  return contour_mean(z, [](cplx w) { return (std::exp(w) - 1.0 - w - 0.5 * w * w) / (w * w * w); });
}

void SolverConfig::validate() const {
  if (n < 8 || (n & (n - 1)) != 0) fail("n", "must be a power of two >= 8");
  if (!(length > 0.0)) fail("length", "must be positive");
  if (!(mu > 0.0 && mu <= 1.0)) fail("mu", "must lie in (0, 1]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) fail("epsilon", "must lie in [0, 1]");
  if (!(dt > 0.0)) fail("dt", "must be positive");
  if (!(T >= dt)) fail("T", "must be at least dt");
  if (!(s >= -10.0 && s <= 10.0)) fail("s", "must lie in [-10, 10]");
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 2.0 / 3.0 + 1e-12)) fail("dealias_fraction", "must lie in (0, 2/3]");
  if (snapshot_stride < 1) fail("snapshot_stride", "must be >= 1");
  if (!(criterion.growth_factor > 1.0)) fail("criterion.growth_factor", "must exceed 1");
  if (!(criterion.dealias_threshold > 0.0)) fail("criterion.dealias_threshold", "must be positive");
}

double dealias_residual(const DiagonalState& state, const SymbolTable& table, double s) {
  const auto r = table.abs();
  const auto keep = table.dealias();
  const auto shell = table.outer_shell();
  double total = 0.0;
  double outer = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (keep[i] == 0.0) continue;
    const double w = std::pow(1.0 + r[i] * r[i], s) * (std::norm(state.u_plus[i]) + std::norm(state.u_minus[i]));
    total += w;
    if (shell[i] != 0.0) outer += w;
  }
  return total > 0.0 ? outer / total : 0.0;
}

Diagnostics diagnose(const DiagonalState& state, const SymbolTable& table, double s) {
  Diagnostics d;
  d.hs_norm = sobolev_norm(state.u_plus, s) + sobolev_norm(state.u_minus, s);
  d.dealias_residual = dealias_residual(state, table, s);
  if (std::isfinite(d.hs_norm) && pairing_residual(state) <= kPairingTolerance) {
    d.energy = energy(undiagonalize(state, table), table);
  } else {
    d.energy = std::numeric_limits<double>::quiet_NaN();
  }
  return d;
}

Etdrk4::Etdrk4(const SymbolTable& table, double dt, double epsilon)
    : table_(table), dt_(dt), epsilon_(epsilon), plus_(make(+1)), minus_(make(-1)) {
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
}

Etdrk4::Coefficients Etdrk4::make(int sign) const {
  const auto m = table_.m();
  Coefficients c;
  const std::size_t size = m.size();
  c.e.resize(size);
  c.e2.resize(size);
  c.q.resize(size);
  c.f1.resize(size);
  c.f2.resize(size);
  c.f3.resize(size);
  const double h = dt_;
  for (std::size_t i = 0; i < size; ++i) {
    const cplx z = -kI * static_cast<double>(sign) * m[i] * h;
    const cplx p2 = phi2(z);
    const cplx p3 = phi3(z);
    c.e[i] = std::exp(z);
    c.e2[i] = std::exp(0.5 * z);
    c.q[i] = 0.5 * h * phi1(0.5 * z);
    c.f1[i] = h * (phi1(z) - 3.0 * p2 + 4.0 * p3);
    c.f2[i] = h * (p2 - 2.0 * p3);
    c.f3[i] = h * (-p2 + 4.0 * p3);
  }
  return c;
}

std::pair<Spectrum, Spectrum> Etdrk4::forcing(const DiagonalState& state) const {
  auto nl = nonlinearity(state, table_);
  const cplx f = -kI * epsilon_;
  nl.first *= f;
  nl.second *= f;
  return nl;
}

DiagonalState Etdrk4::step(const DiagonalState& u) const {
  const std::size_t size = u.u_plus.size();
  if (epsilon_ == 0.0) {
    DiagonalState out = u;
    for (std::size_t i = 0; i < size; ++i) {
      out.u_plus[i] *= plus_.e[i];
      out.u_minus[i] *= minus_.e[i];
    }
    return out;
  }
  auto stage = [&](const DiagonalState& base, const std::pair<Spectrum, Spectrum>& n) {
    DiagonalState out = base;
    for (std::size_t i = 0; i < size; ++i) {
      out.u_plus[i] = plus_.e2[i] * base.u_plus[i] + plus_.q[i] * n.first[i];
      out.u_minus[i] = minus_.e2[i] * base.u_minus[i] + minus_.q[i] * n.second[i];
    }
    return out;
  };
  const auto nu = forcing(u);
  const DiagonalState a = stage(u, nu);
  const auto na = forcing(a);
  const DiagonalState b = stage(u, na);
  const auto nb = forcing(b);
  DiagonalState c = a;
  for (std::size_t i = 0; i < size; ++i) {
    c.u_plus[i] = plus_.e2[i] * a.u_plus[i] + plus_.q[i] * (2.0 * nb.first[i] - nu.first[i]);
    c.u_minus[i] = minus_.e2[i] * a.u_minus[i] + minus_.q[i] * (2.0 * nb.second[i] - nu.second[i]);
  }
  const auto nc = forcing(c);
  DiagonalState out = u;
  for (std::size_t i = 0; i < size; ++i) {
    out.u_plus[i] = plus_.e[i] * u.u_plus[i] + plus_.f1[i] * nu.first[i] +
                    2.0 * plus_.f2[i] * (na.first[i] + nb.first[i]) + plus_.f3[i] * nc.first[i];
    out.u_minus[i] = minus_.e[i] * u.u_minus[i] + minus_.f1[i] * nu.second[i] +
                     2.0 * minus_.f2[i] * (na.second[i] + nb.second[i]) + minus_.f3[i] * nc.second[i];
  }
  return out;
}

DiagonalState step_etdrk4(const DiagonalState& state, double dt) {
  const SymbolTable table(state.grid(), state.mu);
  return Etdrk4(table, dt, state.epsilon).step(state);
}

Trajectory simulate(const SolverConfig& config, const DiagonalState& initial) {
  config.validate();
  if (initial.grid().n() != config.n || std::abs(initial.grid().length() - config.length) > 1e-12 * config.length) {
    throw ShapeError("initial state grid does not match solver config");
  }
  DiagonalState u = initial;
  u.mu = config.mu;
  u.epsilon = config.epsilon;
  if (config.integrator == Integrator::picard) return simulate_picard(config, u);

  const SymbolTable table(u.grid(), config.mu, config.dealias_fraction);
  const long steps = static_cast<long>(std::ceil(config.T / config.dt - 1e-9));
  const double h = config.T / static_cast<double>(steps);
  const Etdrk4 stepper(table, h, config.epsilon);

  Trajectory traj;
  traj.s = config.s;
  auto record = [&](double t, const DiagonalState& st) {
    traj.times.push_back(t);
    traj.states.push_back(st);
    traj.diagnostics.push_back(diagnose(st, table, config.s));
  };
  record(0.0, u);
  const double h0 = traj.diagnostics.front().hs_norm;
  for (long k = 1; k <= steps; ++k) {
    u = stepper.step(u);
    const double t = h * static_cast<double>(k);
    if (!finite(u.u_plus) || !finite(u.u_minus)) {
      traj.blow_up_time = t;
      break;
    }
    if (k % config.snapshot_stride == 0 || k == steps) {
      record(t, u);
      if (config.stop_on_lifespan) {
        const Diagnostics& d = traj.diagnostics.back();
        if (d.hs_norm > config.criterion.growth_factor * h0 ||
            d.dealias_residual > config.criterion.dealias_threshold) {
          break;
        }
      }
    }
  }
  return traj;
}

double lifespan(const Trajectory& trajectory, const LifespanCriterion& criterion) {
  if (trajectory.empty()) throw StateError("lifespan needs a nonempty trajectory");
  const double h0 = trajectory.diagnostics.front().hs_norm;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const Diagnostics& d = trajectory.diagnostics[i];
    if (!std::isfinite(d.hs_norm) || d.hs_norm > criterion.growth_factor * h0 ||
        d.dealias_residual > criterion.dealias_threshold) {
      return trajectory.times[i];
    }
  }
  if (trajectory.blow_up_time) return *trajectory.blow_up_time;
  return kNeverFired;
}

}  // namespace wblab
