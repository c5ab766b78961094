// Radix-2 FFT for the power-of-two grids used throughout.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gwt {

/// In-place complex FFT; length must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

/// Real-input FFT; returns the n/2 + 1 nonnegative-frequency bins.
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// Inverse of rfft for an n-point real signal (n power of two).
/// spec must hold n/2 + 1 bins; DC and Nyquist imaginary parts are ignored.
std::vector<double> irfft(std::span<const std::complex<double>> spec, std::size_t n);

}  // namespace gwt
