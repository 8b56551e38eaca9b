#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wblab {

using cplx = std::complex<double>;

/// 2D complex FFT of an n×n row-major array. Plans are created once per size
/// and shared; execution is re-entrant.
void fft2_forward(int n, std::span<const cplx> in, std::span<cplx> out);
void fft2_backward(int n, std::span<const cplx> in, std::span<cplx> out);

}  // namespace wblab
