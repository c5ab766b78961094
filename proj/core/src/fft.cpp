#include "gwt/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace gwt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n))
    throw std::invalid_argument("fft: length must be a power of two, got " +
                                std::to_string(n));
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

std::vector<std::complex<double>> rfft(std::span<const double> x) {
  std::vector<std::complex<double>> a(x.begin(), x.end());
  fft_inplace(a, false);
  a.resize(x.size() / 2 + 1);
  return a;
}

std::vector<double> irfft(std::span<const std::complex<double>> spec, std::size_t n) {
  if (spec.size() != n / 2 + 1)
    throw std::invalid_argument("irfft: expected " + std::to_string(n / 2 + 1) +
                                " bins, got " + std::to_string(spec.size()));
  std::vector<std::complex<double>> a(n);
  a[0] = spec[0].real();
  for (std::size_t k = 1; k < n / 2; ++k) {
    a[k] = spec[k];
    a[n - k] = std::conj(spec[k]);
  }
  if (n >= 2) a[n / 2] = spec[n / 2].real();
  fft_inplace(a, true);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real();
  return out;
}

}  // namespace gwt
