#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace wblab {

/// Periodic square box [0, L)² with n points per side, standing in for ℝ².
///
/// Flat index `i1 * n + i2` addresses both physical samples (x1 = i1 L/n,
/// x2 = i2 L/n) and Fourier modes (ξ = 2π/L · (j1, j2), FFT ordering, the
/// index n/2 is the Nyquist line and carries wavenumber −πn/L).
///
/// Grids share their lattice tables, copying is cheap.
class Grid {
 public:
  int n() const { return data_->n; }
  double length() const { return data_->length; }
  std::size_t size() const { return data_->radius.size(); }
  double spacing() const { return data_->length / data_->n; }
  double cell_measure() const { return spacing() * spacing(); }
  double area() const { return data_->length * data_->length; }

  /// Axis wavenumber for FFT index j ∈ [0, n).
  double axis_wavenumber(int j) const;
  double min_wavenumber() const;
  /// Largest resolved radius √2·πn/L.
  double max_radial_wavenumber() const;

  std::span<const double> xi1() const { return data_->xi1; }
  std::span<const double> xi2() const { return data_->xi2; }
  std::span<const double> radius() const { return data_->radius; }
  /// True on the two Nyquist lines, where odd symbols break conjugate symmetry.
  std::span<const unsigned char> nyquist() const { return data_->nyquist; }

  double coordinate(int i) const { return i * spacing(); }

  bool operator==(const Grid& other) const {
    return data_ == other.data_ || (n() == other.n() && length() == other.length());
  }

 private:
  struct Data {
    int n;
    double length;
    std::vector<double> xi1, xi2, radius;
    std::vector<unsigned char> nyquist;
  };
  explicit Grid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  friend Grid make_grid(int n, double length);

  std::shared_ptr<const Data> data_;
};

/// Throws ConfigError unless n is a power of two ≥ 8 and length > 0.
Grid make_grid(int n, double length);

void require_same_grid(const Grid& a, const Grid& b);

}  // namespace wblab
