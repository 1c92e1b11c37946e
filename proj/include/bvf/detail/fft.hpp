#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Thin FFTW3 wrapper. Planning is serialized internally; execution is
// reentrant, so these functions are safe to call from several threads.
namespace bvf::detail {

using cplx = std::complex<double>;

std::size_t next_pow2(std::size_t n);

/// Unnormalized DFT, X_k = sum_j x_j exp(sign * 2 pi i j k / N), sign = -1 forward.
std::vector<cplx> dft(std::span<const cplx> x, bool inverse = false);

/// out_i = sum_{m=-K}^{K} kernel[m+K] * signal[i-m] for i in [0, signal.size()),
/// with signal taken as zero outside its range. Exact linear convolution.
std::vector<double> convolve_centered(std::span<const double> signal,
                                      std::span<const double> kernel);

/// Chirp-z evaluation of sum_j x_j exp(-i (t0 + k dt) (x0 + j h)), k < m.
std::vector<cplx> chirp_z(std::span<const cplx> x, double x0, double h, double t0, double dt,
                          std::size_t m);

}  // namespace bvf::detail
