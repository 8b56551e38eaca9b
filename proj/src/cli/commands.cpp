#include "wblab/cli/commands.hpp"

#include <fftw3.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>

#include <CLI11.hpp>

#include "wblab/bessel.hpp"
#include "wblab/cli/output.hpp"
#include "wblab/dynamics.hpp"
#include "wblab/experiments.hpp"
#include "wblab/initial_data.hpp"
#include "wblab/kernel.hpp"
#include "wblab/snapshot_io.hpp"
#include "wblab/strichartz.hpp"
#include "wblab/symbols.hpp"

namespace wblab::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

json base_manifest(const std::string& command, const RunConfig& config, const GlobalOptions& options) {
  json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["fftw"] = std::string(fftw_version);
  m["seed"] = options.seed;
  m["jobs"] = options.jobs;
  m["config"] = config.root();
  return m;
}

void finish(json& manifest, const GlobalOptions& options, Clock::time_point t0) {
  manifest["wall_time_seconds"] = seconds_since(t0);
  write_json(options.out / "manifest.json", manifest);
}

std::string status_cell(const std::string& error) { return error.empty() ? "ok" : "error: " + error; }

json fit_json(const std::vector<double>& x, const std::vector<double>& y) {
  try {
    const ScalingFit f = fit_power_law(x, y);
    return {{"slope", f.slope}, {"prefactor", f.prefactor}, {"r_squared", f.r_squared}, {"samples", x.size()}};
  } catch (const std::exception& e) {
    return {{"error", e.what()}, {"samples", x.size()}};
  }
}

void require_positive(const std::string& key, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigKeyError(key, "must be positive");
}

void require_mu(const std::string& key, double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw ConfigKeyError(key, "must lie in (0, 1]");
}

void require_epsilon(const std::string& key, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw ConfigKeyError(key, "must lie in [0, 1]");
}

int read_grid_n(const RunConfig& c) {
  const int n = c.integer("grid.n");
  if (n < 8 || (n & (n - 1)) != 0) throw ConfigKeyError("grid.n", "must be a power of two >= 8");
  return n;
}

DataSetup read_data(const RunConfig& c, DataSetup d, std::uint64_t seed) {
  const std::string kind = c.string("data.kind", d.kind == DataKind::gaussian     ? "gaussian"
                                                 : d.kind == DataKind::random     ? "random"
                                                                                  : "plane_wave");
  if (kind == "gaussian") {
    d.kind = DataKind::gaussian;
  } else if (kind == "random") {
    d.kind = DataKind::random;
  } else if (kind == "plane_wave") {
    d.kind = DataKind::plane_wave;
  } else {
    throw ConfigKeyError("data.kind", "expected gaussian, random or plane_wave");
  }
  d.D0 = c.number("data.D0", d.D0);
  d.amplitude = c.number("data.amplitude", d.amplitude);
  d.potential = c.number("data.potential", d.potential);
  d.width = c.number("data.width", d.width);
  d.kmin = c.number("data.kmin", d.kmin);
  d.kmax = c.number("data.kmax", d.kmax);
  d.mode = c.integer("data.mode", d.mode);
  d.seed = seed;
  if (!(d.width > 0.0)) throw ConfigKeyError("data.width", "must be positive");
  if (!(d.kmin >= 0.0 && d.kmax >= d.kmin)) throw ConfigKeyError("data.kmax", "need 0 <= kmin <= kmax");
  if (d.mode < 1) throw ConfigKeyError("data.mode", "must be >= 1");
  return d;
}

LifespanCriterion read_criterion(const RunConfig& c, LifespanCriterion k) {
  k.growth_factor = c.number("criterion.growth_factor", k.growth_factor);
  k.dealias_threshold = c.number("criterion.dealias_threshold", k.dealias_threshold);
  if (!(k.growth_factor > 1.0)) throw ConfigKeyError("criterion.growth_factor", "must exceed 1");
  if (!(k.dealias_threshold > 0.0)) throw ConfigKeyError("criterion.dealias_threshold", "must be positive");
  return k;
}

std::string fired_leg(const Trajectory& traj, const LifespanCriterion& k) {
  const double h0 = traj.diagnostics.front().hs_norm;
  for (const Diagnostics& d : traj.diagnostics) {
    if (!std::isfinite(d.hs_norm)) return "nonfinite";
    if (d.hs_norm > k.growth_factor * h0) return "doubling";
    if (d.dealias_residual > k.dealias_threshold) return "dealias";
  }
  return traj.blow_up_time ? "nonfinite" : "none";
}

// Lebesgue exponents may be given as the string "inf".
double exponent(const RunConfig& c, const std::string& key, double fallback) {
  if (c.has(key) && c.root().at(key).is_string()) {
    const std::string v = c.root().at(key).get<std::string>();
    if (v == "inf" || v == "infinity") return kInfinity;
    throw ConfigKeyError(key, "expected a number or \"inf\"");
  }
  return c.number(key, fallback);
}

std::string n2s(double x) { return format_number(x); }

}  // namespace

// ---------------------------------------------------------------- simulate

int cmd_simulate(const RunConfig& c, const GlobalOptions& options) {
  const auto t0 = Clock::now();
  SolverConfig sc;
  sc.n = read_grid_n(c);
  sc.length = c.number("grid.length", sc.length);
  require_positive("grid.length", sc.length);
  sc.mu = c.number("physics.mu", sc.mu);
  require_mu("physics.mu", sc.mu);
  sc.epsilon = c.number("physics.epsilon", sc.epsilon);
  require_epsilon("physics.epsilon", sc.epsilon);
  sc.s = c.number("physics.s", sc.s);
  sc.dt = c.number("solver.dt", sc.dt);
  sc.T = c.number("solver.T", sc.T);
  sc.snapshot_stride = c.integer("solver.snapshot_stride", sc.snapshot_stride);
  sc.dealias_fraction = c.number("solver.dealias_fraction", sc.dealias_fraction);
  sc.stop_on_lifespan = c.boolean("solver.stop_on_lifespan", sc.stop_on_lifespan);
  const std::string integrator = c.string("solver.integrator", "etdrk4");
  if (integrator == "etdrk4") {
    sc.integrator = Integrator::etdrk4;
  } else if (integrator == "picard") {
    sc.integrator = Integrator::picard;
  } else {
    throw ConfigKeyError("solver.integrator", "expected etdrk4 or picard");
  }
  sc.criterion = read_criterion(c, sc.criterion);
  const DataSetup data = read_data(c, DataSetup{}, options.seed);
  const bool write_snapshots = c.boolean("output.snapshots", true);
  c.reject_unknown();
  sc.validate();

  std::filesystem::create_directories(options.out);
  const Grid grid = make_grid(sc.n, sc.length);
  const PhysicalState initial = make_initial_data(grid, sc.mu, sc.epsilon, sc.s, data);
  const Trajectory traj = simulate(sc, diagonalize(initial));
  const SymbolTable table(grid, sc.mu, sc.dealias_fraction);

  CsvWriter csv(options.out / "diagnostics.csv",
                {"index", "time", "hs_norm", "energy", "energy_drift", "dealias_residual"});
  const double e0 = traj.diagnostics.front().energy;
  double max_drift = 0.0;
  json files = json::array({"diagnostics.csv"});
  if (write_snapshots) std::filesystem::create_directories(options.out / "snapshots");
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Diagnostics& d = traj.diagnostics[i];
    const double drift = e0 != 0.0 ? std::abs(d.energy - e0) / std::abs(e0) : std::abs(d.energy - e0);
    if (std::isfinite(drift)) max_drift = std::max(max_drift, drift);
    csv.row({std::to_string(i), n2s(traj.times[i]), n2s(d.hs_norm), n2s(d.energy), n2s(drift),
             n2s(d.dealias_residual)});
    if (write_snapshots) {
      char name[64];
      std::snprintf(name, sizeof name, "snapshots/snapshot_%05zu.bin", i);
      const PhysicalState p = undiagonalize(traj.states[i], table);
      const std::vector<ScalarField> comps{p.eta, p.v.v1, p.v.v2};
      write_snapshot(options.out / name, comps);
      files.push_back(name);
    }
  }

  json m = base_manifest("simulate", c, options);
  const double life = lifespan(traj, sc.criterion);
  m["summary"] = {
      {"lifespan", json_number(life)},
      {"lifespan_criterion",
       {{"growth_factor", sc.criterion.growth_factor},
        {"dealias_threshold", sc.criterion.dealias_threshold},
        {"fired", fired_leg(traj, sc.criterion)}}},
      {"data_size", data_size(initial, sc.s)},
      {"max_energy_drift", max_drift},
      {"final_time", traj.times.back()},
      {"final_hs_norm", json_number(traj.diagnostics.back().hs_norm)},
      {"final_energy", json_number(traj.diagnostics.back().energy)},
      {"blow_up_time", traj.blow_up_time ? json_number(*traj.blow_up_time) : json(nullptr)},
      {"snapshot_components", {"eta", "v1", "v2"}},
  };
  m["outputs"] = files;
  finish(m, options, t0);
  std::cout << "simulate: " << traj.size() << " snapshots, lifespan " << format_number(life) << ", max drift "
            << format_number(max_drift) << "\n";
  return 0;
}

// -------------------------------------------------------------- decay-scan

int cmd_decay_scan(const RunConfig& c, const GlobalOptions& options) {
  const auto t0 = Clock::now();
  const auto lambdas = c.numbers("sweep.lambda");
  const auto mus = c.numbers("sweep.mu");
  const auto ts = c.numbers("sweep.t");
  KernelOptions ko;
  ko.node_density = c.number("kernel.node_density", ko.node_density);
  ko.relative_tolerance = c.number("kernel.relative_tolerance", ko.relative_tolerance);
  ko.max_panels = static_cast<std::size_t>(c.integer("kernel.max_panels", static_cast<int>(ko.max_panels)));
  c.reject_unknown();
  for (double l : lambdas) require_positive("sweep.lambda", l);
  for (double mu : mus) require_mu("sweep.mu", mu);
  for (double t : ts) {
    if (!(t >= 0.0)) throw ConfigKeyError("sweep.t", "times must be >= 0");
  }
  require_positive("kernel.node_density", ko.node_density);
  require_positive("kernel.relative_tolerance", ko.relative_tolerance);

  struct Point {
    double lambda, mu, t;
  };
  std::vector<Point> points;
  for (double mu : mus)
    for (double l : lambdas)
      for (double t : ts) points.push_back({l, mu, t});
  std::vector<DecayRow> rows(points.size());
  std::vector<std::string> errors;
  run_indexed(
      points.size(), options.jobs,
      [&](std::size_t i) { rows[i] = dispersive_ratio(points[i].lambda, points[i].mu, points[i].t, ko); }, errors);

  std::filesystem::create_directories(options.out);
  CsvWriter csv(options.out / "decay.csv",
                {"index", "lambda", "mu", "t", "sup_abs_I", "argmax_radius", "theory_bound", "ratio", "status"});
  double max_ratio = 0.0, min_ratio = kInfinity;
  std::map<std::pair<double, double>, double> sup_t;
  std::map<std::pair<double, double>, std::pair<std::vector<double>, std::vector<double>>> decay_branch;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    const DecayRow& r = rows[i];
    if (!errors[i].empty()) {
      csv.row({std::to_string(i), n2s(p.lambda), n2s(p.mu), n2s(p.t), "nan", "nan", "nan", "nan",
               status_cell(errors[i])});
      continue;
    }
    csv.row({std::to_string(i), n2s(p.lambda), n2s(p.mu), n2s(p.t), n2s(r.sup_abs_I), n2s(r.argmax_radius),
             n2s(r.theory_bound), n2s(r.ratio), "ok"});
    max_ratio = std::max(max_ratio, r.ratio);
    min_ratio = std::min(min_ratio, r.ratio);
    auto& s = sup_t[{p.lambda, p.mu}];
    s = std::max(s, r.ratio);
    if (p.t > 0.0 && r.theory_bound < p.lambda * p.lambda) {
      auto& b = decay_branch[{p.lambda, p.mu}];
      b.first.push_back(p.t);
      b.second.push_back(r.sup_abs_I);
    }
  }
  double sup_max = 0.0, sup_min = kInfinity;
  for (const auto& [k, v] : sup_t) {
    sup_max = std::max(sup_max, v);
    sup_min = std::min(sup_min, v);
  }
  json fits = json::array();
  for (const auto& [k, v] : decay_branch) {
    if (v.first.size() < 3) continue;
    json f = fit_json(v.first, v.second);
    f["lambda"] = k.first;
    f["mu"] = k.second;
    fits.push_back(f);
  }
  json m = base_manifest("decay-scan", c, options);
  m["summary"] = {{"rows", points.size()},
                  {"failed", std::count_if(errors.begin(), errors.end(), [](auto& e) { return !e.empty(); })},
                  {"max_ratio", json_number(max_ratio)},
                  {"min_ratio", json_number(min_ratio)},
                  {"pointwise_spread", json_number(max_ratio / min_ratio)},
                  {"sup_over_t_spread", json_number(sup_max / sup_min)},
                  {"t_exponent_target", -1.0},
                  {"t_exponent_fits", fits}};
  m["outputs"] = {"decay.csv"};
  finish(m, options, t0);
  std::cout << "decay-scan: " << points.size() << " points, max ratio " << format_number(max_ratio) << "\n";
  return 0;
}

// --------------------------------------------------------- strichartz-scan

int cmd_strichartz_scan(const RunConfig& c, const GlobalOptions& options) {
  const auto t0 = Clock::now();
  StrichartzSetup st;
  st.q = exponent(c, "q", st.q);
  st.r = exponent(c, "r", st.r);
  if (!admissible(st.q, st.r)) {
    throw ConfigKeyError("q", "(q, r) = (" + format_number(st.q) + ", " + format_number(st.r) +
                                  ") is not admissible: need q > 2, r >= 2, 1/q + 1/r = 1/2");
  }
  const auto lambdas = c.numbers("sweep.lambda");
  const auto mus = c.numbers("sweep.mu");
  st.T = c.number("times.T", st.T);
  st.times = c.integer("times.count", st.times);
  st.first = c.number("times.first", st.first);
  st.packets = c.integer("packets", st.packets);
  st.min_length = c.number("min_length", st.min_length);
  st.seed = options.seed;
  const double min_scaled = c.number("fit.min_scaled", 4.0);
  const double reference_mu = c.number("fit.reference_mu", 1.0);
  c.reject_unknown();
  for (double l : lambdas) require_positive("sweep.lambda", l);
  for (double mu : mus) require_mu("sweep.mu", mu);
  if (st.times < 3 || !(st.first > 0.0 && st.first < st.T)) throw ConfigKeyError("times", "need count >= 3, 0 < first < T");
  if (st.packets < 1) throw ConfigKeyError("packets", "must be >= 1");

  struct Point {
    double lambda, mu;
  };
  std::vector<Point> points;
  for (double mu : mus)
    for (double l : lambdas) points.push_back({l, mu});
  std::vector<StrichartzRow> rows(points.size());
  std::vector<std::string> errors;
  run_indexed(
      points.size(), options.jobs, [&](std::size_t i) { rows[i] = strichartz_point(points[i].lambda, points[i].mu, st); },
      errors);

  std::filesystem::create_directories(options.out);
  CsvWriter csv(options.out / "strichartz.csv",
                {"index", "lambda", "mu", "q", "r", "n", "length", "norm", "bound", "ratio", "status"});
  std::map<double, std::pair<std::vector<double>, std::vector<double>>> by_mu;
  double max_ratio = 0.0, min_ratio = kInfinity, calibrated = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (!errors[i].empty()) {
      csv.row({std::to_string(i), n2s(p.lambda), n2s(p.mu), n2s(st.q), n2s(st.r), "0", "nan", "nan", "nan", "nan",
               status_cell(errors[i])});
      continue;
    }
    const StrichartzRow& r = rows[i];
    csv.row({std::to_string(i), n2s(p.lambda), n2s(p.mu), n2s(st.q), n2s(st.r), std::to_string(r.n), n2s(r.length),
             n2s(r.norm), n2s(r.bound), n2s(r.ratio), "ok"});
    max_ratio = std::max(max_ratio, r.ratio);
    min_ratio = std::min(min_ratio, r.ratio);
    if (p.mu == reference_mu) calibrated = std::max(calibrated, r.ratio);
    if (std::sqrt(p.mu) * p.lambda >= min_scaled) {
      by_mu[p.mu].first.push_back(bracket(std::sqrt(p.mu) * p.lambda));
      by_mu[p.mu].second.push_back(r.norm);
    }
  }
  json fits = json::array();
  for (const auto& [mu, v] : by_mu) {
    if (v.first.size() < 3) continue;
    json f = fit_json(v.first, v.second);
    f["mu"] = mu;
    fits.push_back(f);
  }
  json m = base_manifest("strichartz-scan", c, options);
  m["summary"] = {{"rows", points.size()},
                  {"max_ratio", json_number(max_ratio)},
                  {"min_ratio", json_number(min_ratio)},
                  {"calibrated_ratio", json_number(calibrated)},
                  {"max_over_calibrated", calibrated > 0.0 ? json_number(max_ratio / calibrated) : json(nullptr)},
                  {"bracket_exponent_target", std::isinf(st.q) ? 0.0 : 1.5 / st.q},
                  {"bracket_exponent_fits", fits}};
  m["outputs"] = {"strichartz.csv"};
  finish(m, options, t0);
  std::cout << "strichartz-scan: " << points.size() << " points, max ratio " << format_number(max_ratio) << "\n";
  return 0;
}

// ----------------------------------------------------------- bilinear-scan

int cmd_bilinear_scan(const RunConfig& c, const GlobalOptions& options) {
  const auto t0 = Clock::now();
  BilinearSetup bs;
  bs.n = read_grid_n(c);
  bs.T = c.number("T", bs.T);
  bs.alpha = c.number("alpha", bs.alpha);
  bs.snapshots = c.integer("snapshots", bs.snapshots);
  bs.draws = c.integer("draws", bs.draws);
  bs.seed = options.seed;
  const auto mus = c.numbers("sweep.mu");
  std::vector<DyadicTriple> triples;
  if (c.has("sweep.triples")) {
    const json& list = c.root()["sweep"]["triples"];
    if (!list.is_array()) throw ConfigKeyError("sweep.triples", "expected a list of [l0, l1, l2]");
    for (const auto& t : list) {
      if (!t.is_array() || t.size() != 3) throw ConfigKeyError("sweep.triples", "each entry must be [l0, l1, l2]");
      triples.push_back({t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
    }
  } else {
    const auto l1s = c.numbers("sweep.lambda1");
    const auto f0 = c.numbers("sweep.lambda0_factors", {0.25, 0.5, 1.0});
    const auto f2 = c.numbers("sweep.lambda2_factors", {1.0});
    for (double l1 : l1s)
      for (double a : f0)
        for (double b : f2) triples.push_back({a * l1, l1, b * l1});
  }
  const double reference_mu = c.number("fit.reference_mu", 1.0);
  c.reject_unknown();
  for (const auto& t : triples) {
    try {
      t.validate();
    } catch (const DomainError& e) {
      throw ConfigKeyError("sweep", e.what());
    }
  }
  for (double mu : mus) require_mu("sweep.mu", mu);
  require_positive("T", bs.T);
  if (!(bs.alpha > 0.0 && bs.alpha < 0.25)) throw ConfigKeyError("alpha", "must lie in (0, 1/4)");
  if (bs.snapshots < 3) throw ConfigKeyError("snapshots", "must be >= 3");
  if (bs.draws < 1) throw ConfigKeyError("draws", "must be >= 1");

  struct Point {
    DyadicTriple triple;
    double mu;
  };
  std::vector<Point> points;
  for (double mu : mus)
    for (const auto& t : triples) points.push_back({t, mu});
  std::vector<std::array<BilinearRow, 2>> rows(points.size());
  std::vector<std::string> errors;
  run_indexed(
      points.size(), options.jobs, [&](std::size_t i) { rows[i] = bilinear_point(points[i].triple, points[i].mu, bs); },
      errors);

  std::filesystem::create_directories(options.out);
  CsvWriter csv(options.out / "bilinear.csv", {"index", "lambda0", "lambda1", "lambda2", "mu", "variant", "n", "lhs",
                                               "x_u", "x_v", "constant", "ratio", "status"});
  double max_ratio[2] = {0.0, 0.0}, calibrated[2] = {0.0, 0.0};
  const char* names[2] = {"C", "C_tilde"};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int v = 0; v < 2; ++v) {
      const Point& p = points[i];
      if (!errors[i].empty()) {
        csv.row({std::to_string(i), n2s(p.triple.lambda0), n2s(p.triple.lambda1), n2s(p.triple.lambda2), n2s(p.mu),
                 names[v], std::to_string(bs.n), "nan", "nan", "nan", "nan", "nan", status_cell(errors[i])});
        continue;
      }
      const BilinearRow& r = rows[i][v];
      csv.row({std::to_string(i), n2s(r.triple.lambda0), n2s(r.triple.lambda1), n2s(r.triple.lambda2), n2s(r.mu),
               names[v], std::to_string(r.n), n2s(r.lhs), n2s(r.x_u), n2s(r.x_v), n2s(r.constant), n2s(r.ratio),
               "ok"});
      max_ratio[v] = std::max(max_ratio[v], r.ratio);
      if (p.mu == reference_mu) calibrated[v] = std::max(calibrated[v], r.ratio);
    }
  }
  json m = base_manifest("bilinear-scan", c, options);
  json summary = {{"rows", 2 * points.size()}};
  for (int v = 0; v < 2; ++v) {
    summary[names[v]] = {
        {"max_ratio", max_ratio[v]},
        {"calibrated_ratio", calibrated[v]},
        {"max_over_calibrated", calibrated[v] > 0.0 ? json_number(max_ratio[v] / calibrated[v]) : json(nullptr)}};
  }
  m["summary"] = summary;
  m["outputs"] = {"bilinear.csv"};
  finish(m, options, t0);
  std::cout << "bilinear-scan: " << points.size() << " points, max ratio C " << format_number(max_ratio[0])
            << ", C_tilde " << format_number(max_ratio[1]) << "\n";
  return 0;
}

// ---------------------------------------------------------- lifespan-sweep

int cmd_lifespan_sweep(const RunConfig& c, const GlobalOptions& options) {
  const auto t0 = Clock::now();
  LifespanSetup ls;
  ls.n = read_grid_n(c);
  ls.length = c.number("grid.length", ls.length);
  require_positive("grid.length", ls.length);
  ls.s = c.number("physics.s", ls.s);
  ls.dt = c.number("solver.dt", ls.dt);
  ls.T = c.number("solver.T", ls.T);
  ls.snapshot_stride = c.integer("solver.snapshot_stride", ls.snapshot_stride);
  ls.criterion = read_criterion(c, LifespanCriterion{});
  ls.data = read_data(c, ls.data, options.seed);
  ls.window_c = c.number("theory.window_c", ls.window_c);
  ls.alpha = c.number("theory.alpha", ls.alpha);
  const auto eps = c.numbers("sweep.epsilon");
  const auto mus = c.numbers("sweep.mu");
  c.reject_unknown();
  for (double e : eps) {
    require_epsilon("sweep.epsilon", e);
    if (!(e > 0.0)) throw ConfigKeyError("sweep.epsilon", "must be positive");
  }
  for (double mu : mus) require_mu("sweep.mu", mu);
  require_positive("solver.dt", ls.dt);
  if (!(ls.T >= ls.dt)) throw ConfigKeyError("solver.T", "must be at least solver.dt");
  if (ls.snapshot_stride < 1) throw ConfigKeyError("solver.snapshot_stride", "must be >= 1");
  require_positive("theory.window_c", ls.window_c);
  if (!(ls.alpha > 0.0 && ls.alpha < 0.25)) throw ConfigKeyError("theory.alpha", "must lie in (0, 1/4)");

  struct Point {
    double mu, epsilon;
  };
  std::vector<Point> points;
  for (double mu : mus)
    for (double e : eps) points.push_back({mu, e});
  std::vector<LifespanRow> rows(points.size());
  std::vector<std::string> errors;
  run_indexed(
      points.size(), options.jobs, [&](std::size_t i) { rows[i] = lifespan_point(points[i].mu, points[i].epsilon, ls); },
      errors);

  std::filesystem::create_directories(options.out);
  CsvWriter csv(options.out / "lifespan.csv", {"index", "mu", "epsilon", "D0", "s", "lifespan", "fired",
                                               "theory_lifespan", "final_growth", "status"});
  std::map<double, std::pair<std::vector<double>, std::vector<double>>> eps_fit, mu_fit;
  int violations = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (!errors[i].empty()) {
      csv.row({std::to_string(i), n2s(p.mu), n2s(p.epsilon), "nan", n2s(ls.s), "nan", "none", "nan", "nan",
               status_cell(errors[i])});
      continue;
    }
    const LifespanRow& r = rows[i];
    csv.row({std::to_string(i), n2s(r.mu), n2s(r.epsilon), n2s(r.D0), n2s(ls.s), n2s(r.lifespan), r.fired,
             n2s(r.theory), n2s(r.final_growth), "ok"});
    if (r.lifespan < r.theory) ++violations;
    if (std::isfinite(r.lifespan)) {
      eps_fit[r.mu].first.push_back(r.epsilon);
      eps_fit[r.mu].second.push_back(r.lifespan);
      mu_fit[r.epsilon].first.push_back(r.mu);
      mu_fit[r.epsilon].second.push_back(r.lifespan);
    }
  }
  json ef = json::array(), mf = json::array();
  for (const auto& [mu, v] : eps_fit) {
    if (v.first.size() < 3) continue;
    json f = fit_json(v.first, v.second);
    f["mu"] = mu;
    ef.push_back(f);
  }
  for (const auto& [e, v] : mu_fit) {
    if (v.first.size() < 3) continue;
    json f = fit_json(v.first, v.second);
    f["epsilon"] = e;
    mf.push_back(f);
  }
  const double delta = lifespan_delta(ls.alpha);
  json m = base_manifest("lifespan-sweep", c, options);
  m["summary"] = {{"rows", points.size()},
                  {"criterion",
                   {{"growth_factor", ls.criterion.growth_factor},
                    {"dealias_threshold", ls.criterion.dealias_threshold}}},
                  {"violations_of_theory_line", violations},
                  {"delta", delta},
                  {"theory_epsilon_exponent", -2.0 + delta},
                  {"theory_mu_exponent", 1.5 - delta},
                  {"epsilon_exponent_fits", ef},
                  {"mu_exponent_fits", mf}};
  m["outputs"] = {"lifespan.csv"};
  finish(m, options, t0);
  std::cout << "lifespan-sweep: " << points.size() << " runs, " << violations << " below the theory line\n";
  return 0;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const RunConfig& c, const GlobalOptions& options) {
  const auto t0 = Clock::now();
  c.reject_unknown();
  struct Check {
    std::string name;
    double value;
    double limit;
  };
  std::vector<Check> checks;
  const Grid grid = make_grid(32, 16.0);
  const SymbolTable table(grid, 1.0);

  {
    const Spectrum f = random_band_field(grid, 0.0, 4.0, options.seed);
    const Spectrum g = propagate_component(propagate_component(f, 3.7, +1, table.m()), -3.7, +1, table.m());
    const double iso = std::abs(propagate_component(f, 3.7, +1, table.m()).l2_norm() - f.l2_norm()) / f.l2_norm();
    checks.push_back({"propagator isometry", iso, 1e-13});
    checks.push_back({"propagator inversion", (g - f).l2_norm() / f.l2_norm(), 1e-13});
  }
  {
    const PhysicalState st = random_state(grid, 1.0, 1.0, 0.0, 3.0, options.seed + 1);
    const PhysicalState back = undiagonalize(diagonalize(st, table), table);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      num += std::pow(back.eta.values()[i] - st.eta.values()[i], 2) +
             std::pow(back.v.v1.values()[i] - st.v.v1.values()[i], 2) +
             std::pow(back.v.v2.values()[i] - st.v.v2.values()[i], 2);
      den += std::pow(st.eta.values()[i], 2) + std::pow(st.v.v1.values()[i], 2) + std::pow(st.v.v2.values()[i], 2);
    }
    checks.push_back({"diagonalization round trip", std::sqrt(num / den), 1e-12});
    checks.push_back({"hamiltonian residual", hamiltonian_residual(st, table), 1e-8});
  }
  {
    SolverConfig sc;
    sc.n = 32;
    sc.length = 16.0;
    sc.dt = 1e-2;
    sc.T = 0.2;
    const PhysicalState st = rescale_to(gaussian_state(grid, 1.0, 1.0, 1.0, 1.0, 2.0), 0.5, 0.5);
    const Trajectory tr = simulate(sc, diagonalize(st, table));
    const double e0 = tr.diagnostics.front().energy;
    checks.push_back({"energy drift", std::abs(tr.diagnostics.back().energy - e0) / e0, 1e-8});
  }
  checks.push_back({"bessel J0(1)", std::abs(bessel_j(0, 1.0) - 0.7651976865579666), 1e-14});
  checks.push_back({"admissible (4,4) and not (2,inf)", (admissible(4, 4) && !admissible(2, kInfinity)) ? 0.0 : 1.0,
                    0.5});
  {
    const ScalingFit f = fit_power_law({1, 2, 4, 8}, {3.0, 0.75, 0.1875, 0.046875});
    checks.push_back({"power-law fit slope", std::abs(f.slope + 2.0), 1e-12});
  }

  bool ok = true;
  json list = json::array();
  for (const auto& ch : checks) {
    const bool pass = ch.value <= ch.limit;
    ok = ok && pass;
    std::printf("%s  %-34s %.3e (limit %.1e)\n", pass ? "PASS" : "FAIL", ch.name.c_str(), ch.value, ch.limit);
    list.push_back({{"name", ch.name}, {"value", ch.value}, {"limit", ch.limit}, {"pass", pass}});
  }
  std::filesystem::create_directories(options.out);
  json m = base_manifest("selftest", c, options);
  m["summary"] = {{"passed", ok}, {"checks", list}};
  m["outputs"] = json::array();
  finish(m, options, t0);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------- entry

int run(int argc, char** argv) {
  CLI::App app{"wblab - Whitham-Boussinesq pseudospectral laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOptions options;
  std::string config_path;
  std::vector<std::string> overrides;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--out", options.out, "output directory")->capture_default_str();
    sub->add_option("--jobs", options.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
    sub->add_option("--seed", options.seed, "seed for random data and packets")->capture_default_str();
    sub->add_option("--set", overrides, "override a config key, e.g. --set grid.n=64 (repeatable)");
  };
  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, const GlobalOptions&);
  };
  const Entry entries[] = {
      {"simulate", "integrate one initial state and write diagnostics and snapshots", cmd_simulate},
      {"decay-scan", "sup_x |I_{lambda,mu}(x,t)| against the dispersive bound", cmd_decay_scan},
      {"strichartz-scan", "localized Strichartz norms of free packets", cmd_strichartz_scan},
      {"bilinear-scan", "bilinear estimate ratios over dyadic triples", cmd_bilinear_scan},
      {"lifespan-sweep", "numerical lifespan over epsilon and mu", cmd_lifespan_sweep},
      {"selftest", "fast internal consistency checks", cmd_selftest},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    subs.push_back({sub, &e});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigExit;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    try {
      RunConfig config = config_path.empty() ? RunConfig() : RunConfig::load(config_path);
      for (const auto& o : overrides) config.apply_override(o);
      return entry->fn(config, options);
    } catch (const ConfigError& e) {
      std::cerr << "wblab " << entry->name << ": configuration error: " << e.what() << "\n";
      return kConfigExit;
    } catch (const std::exception& e) {
      std::cerr << "wblab " << entry->name << ": error: " << e.what() << "\n";
      return 1;
    }
  }
  return kConfigExit;
}

}  // namespace wblab::cli
