#include "wblab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wblab/bessel.hpp"
#include "wblab/error.hpp"
#include "wblab/quadrature.hpp"
#include "wblab/symbols.hpp"

namespace wblab {

namespace {

using cplx = std::complex<double>;

double mass_once() {
  QuadratureOptions opt;
  opt.initial_panels = 16;
  opt.abs_tolerance = 1e-15;
  auto f = [](double r) { return cplx(r * bump_beta(r), 0.0); };
  return integrate_gk15(f, 0.5, 2.0, opt).value.real();
}

}  // namespace

void KernelQuery::validate() const {
  if (!(lambda > 0.0)) throw DomainError("kernel lambda must be positive");
  if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("kernel mu must lie in (0, 1]");
  if (!(radius >= 0.0)) throw DomainError("kernel radius must be >= 0");
  if (!(time >= 0.0)) throw DomainError("kernel time must be >= 0");
}

double beta_mass() {
  static const double mass = mass_once();
  return mass;
}

KernelValue kernel_I(const KernelQuery& q, const KernelOptions& options) {
  q.validate();
  const double lam = q.lambda;
  const double scale = 2.0 * std::numbers::pi * lam * lam;
  // total phase variation over r ∈ [1/2, 2]: t·Δm_μ(λr) + 1.5λ|x|
  const double phase = q.time * (m_mu(q.mu, 2.0 * lam) - m_mu(q.mu, 0.5 * lam)) + 1.5 * lam * q.radius;
  const double wanted = std::ceil(options.node_density * phase / std::numbers::pi) + 8.0;
  QuadratureOptions opt;
  opt.max_panels = options.max_panels;
  if (wanted > static_cast<double>(options.max_panels)) {
    std::ostringstream msg;
    msg << "kernel phase " << phase << " needs " << wanted << " panels, budget " << options.max_panels;
    throw ResolutionError(msg.str());
  }
  opt.initial_panels = static_cast<std::size_t>(wanted);
  opt.abs_tolerance = options.relative_tolerance * beta_mass();
  const double t = q.time;
  const double mu = q.mu;
  const double rho = q.radius;
  auto f = [=](double r) {
    const double b = bump_beta(r);
    if (b == 0.0) return cplx(0.0, 0.0);
    const double ph = t * m_mu(mu, lam * r);
    return r * b * bessel_j(0, lam * r * rho) * cplx(std::cos(ph), std::sin(ph));
  };
  const QuadratureResult res = integrate_gk15(f, 0.5, 2.0, opt);
  return {scale * res.value, scale * res.error, res.panels};
}

double dispersive_bound(double lambda, double mu, double t) {
  const double l2 = lambda * lambda;
  if (t <= 0.0) return l2;
  const double disp = std::pow(mu, -0.5) * std::pow(bracket(std::sqrt(mu) * lambda), 1.5) / t;
  return std::min(l2, disp);
}

std::vector<double> decay_scan_radii(double lambda, double mu, double t) {
  std::vector<double> out;
  for (int j = 0; j <= 8; ++j) out.push_back(j / (8.0 * lambda));
  if (t > 0.0) {
    const double centre = std::pow(bracket(std::sqrt(mu) * lambda), -0.5) * t;
    for (int j = 0; j < 64; ++j) out.push_back(centre * std::pow(10.0, -2.0 + 4.0 * j / 63.0));
    const double lo = std::max(0.0, t * m_mu_derivatives(mu, 2.0 * lambda).dm - 4.0 / lambda);
    const double hi = t * m_mu_derivatives(mu, 0.5 * lambda).dm + 4.0 / lambda;
    double step = 0.25 / lambda;
    const double cap = 600.0;
    if ((hi - lo) / step > cap) step = (hi - lo) / cap;
    for (double r = lo; r <= hi; r += step) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DecayRow dispersive_ratio(double lambda, double mu, double t, const KernelOptions& options) {
  KernelQuery q{lambda, mu, 0.0, t};
  q.validate();
  auto amp = [&](double rho) {
    q.radius = std::max(0.0, rho);
    return std::abs(kernel_I(q, options).value);
  };
  const auto radii = decay_scan_radii(lambda, mu, t);
  std::vector<double> vals(radii.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    vals[i] = amp(radii[i]);
    if (vals[i] > vals[best]) best = i;
  }
  double arg = radii[best];
  double sup = vals[best];
  // golden-section refinement inside the bracketing neighbours
  double a = best > 0 ? radii[best - 1] : radii[best];
  double b = best + 1 < radii.size() ? radii[best + 1] : radii[best];
  if (b > a) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = amp(c);
    double fd = amp(d);
    for (int it = 0; it < 40 && (b - a) > 1e-6 * (1.0 + std::abs(arg)); ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = amp(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = amp(d);
      }
    }
    if (fc > sup) {
      sup = fc;
      arg = c;
    }
    if (fd > sup) {
      sup = fd;
      arg = d;
    }
  }
  const double bound = dispersive_bound(lambda, mu, t);
  return {lambda, mu, t, sup, arg, bound, sup / bound};
}

double van_der_corput_ratio(const std::function<double(double)>& psi, const std::function<double(double)>& g,
                            double a, double b, double t, double A) {
  if (!(t > 0.0)) throw DomainError("van der Corput ratio needs t > 0");
  if (!(A > 0.0)) throw DomainError("van der Corput ratio needs A > 0");
  if (!(b > a)) throw DomainError("van der Corput ratio needs a < b");
  constexpr int kSamples = 4096;
  double variation = 0.0;
  double phase_variation = 0.0;
  double prev_g = g(a);
  double prev_p = psi(a);
  for (int j = 1; j <= kSamples; ++j) {
    const double x = a + (b - a) * j / kSamples;
    const double gx = g(x);
    const double px = psi(x);
    variation += std::abs(gx - prev_g);
    phase_variation += std::abs(px - prev_p);
    prev_g = gx;
    prev_p = px;
  }
  const double amplitude = std::abs(g(b)) + variation;
  if (amplitude == 0.0) return 0.0;
  QuadratureOptions opt;
  opt.initial_panels = static_cast<std::size_t>(std::ceil(t * phase_variation / std::numbers::pi)) + 8;
  opt.max_panels = std::max<std::size_t>(opt.initial_panels * 4, 1u << 16);
  opt.abs_tolerance = 1e-12 * amplitude * (b - a);
  auto f = [&](double x) {
    const double ph = t * psi(x);
    return g(x) * cplx(std::cos(ph), std::sin(ph));
  };
  const double integral = std::abs(integrate_gk15(f, a, b, opt).value);
  return integral / (amplitude / std::sqrt(A * t));
}

}  // namespace wblab
