#include "wblab/field.hpp"

#include <algorithm>
#include <cmath>

#include "wblab/error.hpp"

namespace wblab {

Spectrum::Spectrum(Grid grid) : grid_(std::move(grid)), c_(grid_.size()) {}

Spectrum::Spectrum(Grid grid, std::vector<cplx> coeffs) : grid_(std::move(grid)), c_(std::move(coeffs)) {
  if (c_.size() != grid_.size()) throw ShapeError("spectrum size does not match grid");
}

Spectrum Spectrum::from_physical(const Grid& grid, std::span<const cplx> samples) {
  if (samples.size() != grid.size()) throw ShapeError("sample count does not match grid");
  std::vector<cplx> c(grid.size());
  fft2_forward(grid.n(), samples, c);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& v : c) v *= scale;
  return Spectrum(grid, std::move(c));
}

Spectrum Spectrum::from_real(const Grid& grid, std::span<const double> samples) {
  std::vector<cplx> z(samples.begin(), samples.end());
  return from_physical(grid, z);
}

std::vector<cplx> Spectrum::physical() const {
  std::vector<cplx> out(c_.size());
  fft2_backward(grid_.n(), c_, out);
  return out;
}

std::vector<double> Spectrum::physical_real() const {
  const auto z = physical();
  std::vector<double> out(z.size());
  std::transform(z.begin(), z.end(), out.begin(), [](cplx v) { return v.real(); });
  return out;
}

double Spectrum::l2_norm() const {
  double sum = 0.0;
  for (const auto& v : c_) sum += std::norm(v);
  return std::sqrt(sum * grid_.area());
}

double Spectrum::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

Spectrum& Spectrum::operator+=(const Spectrum& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Spectrum& Spectrum::operator*=(cplx a) {
  for (auto& v : c_) v *= a;
  return *this;
}

Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
Spectrum operator*(cplx a, Spectrum b) { return b *= a; }

std::size_t mirror_index(int n, std::size_t index) {
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t i1 = index / un;
  const std::size_t i2 = index % un;
  return ((un - i1) % un) * un + (un - i2) % un;
}

double conjugate_symmetry_residual(const Spectrum& s) {
  const int n = s.grid().n();
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    worst = std::max(worst, std::abs(s[mirror_index(n, i)] - std::conj(s[i])));
  }
  const double scale = s.max_abs();
  return scale > 0.0 ? worst / scale : 0.0;
}

ScalarField::ScalarField(Grid grid) : grid_(std::move(grid)), v_(grid_.size(), 0.0) {}

ScalarField::ScalarField(Grid grid, std::vector<double> values) : grid_(std::move(grid)), v_(std::move(values)) {
  if (v_.size() != grid_.size()) throw ShapeError("field size does not match grid");
}

ScalarField ScalarField::from_function(const Grid& grid, const std::function<double(double, double)>& f) {
  const int n = grid.n();
  std::vector<double> v(grid.size());
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      v[static_cast<std::size_t>(i1) * n + i2] = f(grid.coordinate(i1), grid.coordinate(i2));
    }
  }
  return ScalarField(grid, std::move(v));
}

ScalarField ScalarField::from_spectrum(const Spectrum& s) { return ScalarField(s.grid(), s.physical_real()); }

Spectrum ScalarField::to_spectrum() const { return Spectrum::from_real(grid_, v_); }

double ScalarField::l2_norm() const {
  double sum = 0.0;
  for (double x : v_) sum += x * x;
  return std::sqrt(sum * grid_.cell_measure());
}

}  // namespace wblab
