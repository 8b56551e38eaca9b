#include "wblab/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "wblab/error.hpp"

namespace wblab {

namespace {

using cplx = std::complex<double>;

// Kronrod nodes (positive half, the last is the centre) and weights.
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the 7-point rule on Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(centre);
  cplx kronrod = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx pair = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_gk15(const std::function<cplx(double)>& f, double a, double b,
                                const QuadratureOptions& options) {
  const std::size_t start = options.initial_panels == 0 ? 1 : options.initial_panels;
  if (start > options.max_panels) {
    std::ostringstream msg;
    msg << "integrand needs " << start << " panels, budget is " << options.max_panels;
    throw ResolutionError(msg.str());
  }
  std::priority_queue<Panel> heap;
  cplx total = 0.0;
  double error = 0.0;
  const double width = (b - a) / static_cast<double>(start);
  for (std::size_t i = 0; i < start; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = i + 1 == start ? b : lo + width;
    Panel p = gk15(f, lo, hi);
    total += p.value;
    error += p.error;
    heap.push(p);
  }
  std::size_t panels = start;
  while (error > options.abs_tolerance) {
    if (panels + 1 > options.max_panels) {
      std::ostringstream msg;
      msg << "quadrature did not reach tolerance " << options.abs_tolerance << " within " << options.max_panels
          << " panels (estimate " << error << ")";
      throw ResolutionError(msg.str());
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted at machine precision
  }
  // Re-sum to shed the drift of incremental updates.
  total = 0.0;
  error = 0.0;
  const std::size_t count = heap.size();
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {total, error, count, count * 15};
}

}  // namespace wblab
