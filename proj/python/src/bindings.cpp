#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "wblab/cli/commands.hpp"
#include "wblab/dynamics.hpp"
#include "wblab/error.hpp"
#include "wblab/estimates.hpp"
#include "wblab/initial_data.hpp"
#include "wblab/integrator.hpp"
#include "wblab/kernel.hpp"
#include "wblab/strichartz.hpp"
#include "wblab/symbols.hpp"

namespace py = pybind11;
using namespace wblab;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_numpy(const ScalarField& f) {
  const int n = f.grid().n();
  Array out({n, n});
  std::copy(f.values().begin(), f.values().end(), out.mutable_data());
  return out;
}

ScalarField from_numpy(const Grid& g, const Array& a, const char* name) {
  if (a.ndim() != 2 || a.shape(0) != g.n() || a.shape(1) != g.n()) {
    throw ShapeError(std::string(name) + " must have shape (n, n)");
  }
  return ScalarField(g, std::vector<double>(a.data(), a.data() + a.size()));
}

py::dict fit_dict(const ScalingFit& f) {
  py::dict d;
  d["slope"] = f.slope;
  d["prefactor"] = f.prefactor;
  d["r_squared"] = f.r_squared;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Whitham–Boussinesq numerical laboratory";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);

  m.def("k_mu", py::vectorize(k_mu), py::arg("mu"), py::arg("r"));
  m.def("m_mu", py::vectorize(m_mu), py::arg("mu"), py::arg("r"));
  m.def("bracket", py::vectorize(bracket), py::arg("x"));
  m.def("bump_beta", py::vectorize(bump_beta), py::arg("s"));

  py::class_<Grid>(m, "Grid")
      .def(py::init(&make_grid), py::arg("n"), py::arg("length"))
      .def_property_readonly("n", &Grid::n)
      .def_property_readonly("length", &Grid::length)
      .def("coordinates", [](const Grid& g) {
        std::vector<double> x(g.n());
        for (int i = 0; i < g.n(); ++i) x[i] = g.coordinate(i);
        return x;
      });

  py::class_<PhysicalState>(m, "State")
      .def(py::init([](const Grid& g, const Array& eta, const Array& v1, const Array& v2, double mu, double eps) {
             return PhysicalState{from_numpy(g, eta, "eta"), {from_numpy(g, v1, "v1"), from_numpy(g, v2, "v2")}, mu,
                                  eps};
           }),
           py::arg("grid"), py::arg("eta"), py::arg("v1"), py::arg("v2"), py::arg("mu"), py::arg("epsilon"))
      .def_property_readonly("grid", &PhysicalState::grid)
      .def_property_readonly("eta", [](const PhysicalState& s) { return to_numpy(s.eta); })
      .def_property_readonly("v1", [](const PhysicalState& s) { return to_numpy(s.v.v1); })
      .def_property_readonly("v2", [](const PhysicalState& s) { return to_numpy(s.v.v2); })
      .def_readonly("mu", &PhysicalState::mu)
      .def_readonly("epsilon", &PhysicalState::epsilon);

  m.def("gaussian_state", &gaussian_state, py::arg("grid"), py::arg("mu"), py::arg("epsilon"),
        py::arg("amplitude") = 1.0, py::arg("potential") = 1.0, py::arg("width") = 3.0);
  m.def("random_state", &random_state, py::arg("grid"), py::arg("mu"), py::arg("epsilon"), py::arg("kmin"),
        py::arg("kmax"), py::arg("seed") = 1);
  m.def("plane_wave_state", &plane_wave_state, py::arg("grid"), py::arg("mu"), py::arg("epsilon"),
        py::arg("mode") = 1);
  m.def("data_size", &data_size, py::arg("state"), py::arg("s"));
  m.def("rescale_to", &rescale_to, py::arg("state"), py::arg("D0"), py::arg("s"));
  m.def("energy", py::overload_cast<const PhysicalState&>(&energy), py::arg("state"));
  m.def("hamiltonian_residual", py::overload_cast<const PhysicalState&>(&hamiltonian_residual), py::arg("state"));

  m.def(
      "simulate",
      [](const PhysicalState& initial, double dt, double T, double s, int snapshot_stride, double growth_factor,
         double dealias_threshold) {
        SolverConfig c;
        c.n = initial.grid().n();
        c.length = initial.grid().length();
        c.mu = initial.mu;
        c.epsilon = initial.epsilon;
        c.dt = dt;
        c.T = T;
        c.s = s;
        c.snapshot_stride = snapshot_stride;
        c.criterion = {growth_factor, dealias_threshold};
        c.validate();
        Trajectory tr;
        {
          py::gil_scoped_release release;
          tr = simulate(c, diagonalize(initial));
        }
        std::vector<double> hs, en, res;
        for (const auto& d : tr.diagnostics) {
          hs.push_back(d.hs_norm);
          en.push_back(d.energy);
          res.push_back(d.dealias_residual);
        }
        py::dict out;
        out["times"] = tr.times;
        out["hs_norm"] = hs;
        out["energy"] = en;
        out["dealias_residual"] = res;
        out["lifespan"] = lifespan(tr, c.criterion);
        out["final"] = undiagonalize(tr.states.back());
        return out;
      },
      py::arg("state"), py::arg("dt"), py::arg("T"), py::arg("s") = 0.5, py::arg("snapshot_stride") = 16,
      py::arg("growth_factor") = 2.0, py::arg("dealias_threshold") = 1e-3);

  m.def(
      "kernel_I",
      [](double lambda, double mu, double radius, double t) {
        return kernel_I({lambda, mu, radius, t}).value;
      },
      py::arg("lam"), py::arg("mu"), py::arg("radius"), py::arg("t"));
  m.def("dispersive_bound", &dispersive_bound, py::arg("lam"), py::arg("mu"), py::arg("t"));
  m.def(
      "dispersive_ratio",
      [](double lambda, double mu, double t) {
        const DecayRow r = dispersive_ratio(lambda, mu, t);
        py::dict d;
        d["sup_abs_I"] = r.sup_abs_I;
        d["argmax_radius"] = r.argmax_radius;
        d["theory_bound"] = r.theory_bound;
        d["ratio"] = r.ratio;
        return d;
      },
      py::arg("lam"), py::arg("mu"), py::arg("t"));
  m.def("strichartz_bound", &strichartz_bound, py::arg("lam"), py::arg("mu"), py::arg("q"));
  m.def(
      "bilinear_constant",
      [](double l0, double l1, double l2, double mu, double T, double alpha, bool tilde) {
        return bilinear_constant({l0, l1, l2}, mu, T, alpha, tilde ? BilinearVariant::C_tilde : BilinearVariant::C);
      },
      py::arg("lambda0"), py::arg("lambda1"), py::arg("lambda2"), py::arg("mu"), py::arg("T"), py::arg("alpha"),
      py::arg("tilde") = false);
  m.def("theory_lifespan", &theory_lifespan, py::arg("D0"), py::arg("mu"), py::arg("epsilon"), py::arg("delta"),
        py::arg("C"));
  m.def("lifespan_delta", &lifespan_delta, py::arg("alpha"));
  m.def(
      "fit_power_law", [](const std::vector<double>& x, const std::vector<double>& y) { return fit_dict(fit_power_law(x, y)); },
      py::arg("x"), py::arg("y"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "wblab");
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        py::gil_scoped_release release;
        return cli::run(static_cast<int>(argv.size()), argv.data());
      },
      py::arg("args"), "Run a wblab subcommand in-process; returns the exit status.");
}
