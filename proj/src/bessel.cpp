#include "wblab/bessel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wblab/error.hpp"

namespace wblab {

namespace {

constexpr double kSeam = 17.0;

double series(int k, double x) {
  const long double h = 0.5L * x;
  const long double h2 = h * h;
  long double term = 1.0L;
  for (int j = 1; j <= k; ++j) term *= h / j;
  long double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= -h2 / (static_cast<long double>(m) * (m + k));
    sum += term;
    if (std::fabs(term) < 1e-21L * std::fabs(sum) + 1e-300L && m > h) break;
  }
  return static_cast<double>(sum);
}

double hankel(int k, double x) {
  const double mu = 4.0 * k * k;
  double p = 0.0;
  double q = 0.0;
  double a = 1.0;  // a_j(k) / x^j
  double last = INFINITY;
  for (int j = 0; j < 60; ++j) {
    if (j > 0) {
      const double odd = 2.0 * j - 1.0;
      a *= (mu - odd * odd) / (j * 8.0 * x);
    }
    const double mag = std::abs(a);
    if (mag > last) break;
    last = mag;
    switch (j % 4) {
      case 0: p += a; break;
      case 1: q += a; break;
      case 2: p -= a; break;
      default: q -= a; break;
    }
    if (mag < 1e-17 * std::abs(p)) break;
  }
  const double phase = (0.5 * k + 0.25) * std::numbers::pi;
  const double c = std::cos(x) * std::cos(phase) + std::sin(x) * std::sin(phase);
  const double s = std::sin(x) * std::cos(phase) - std::cos(x) * std::sin(phase);
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * c - q * s);
}

}  // namespace

double bessel_j(int k, double x) {
  if (k < 0 || k > 8) {
    std::ostringstream msg;
    msg << "bessel_j supports orders 0..8, got " << k;
    throw DomainError(msg.str());
  }
  if (!(x >= 0.0)) {
    std::ostringstream msg;
    msg << "bessel_j needs x >= 0, got " << x;
    throw DomainError(msg.str());
  }
  return x < kSeam ? series(k, x) : hankel(k, x);
}

}  // namespace wblab
