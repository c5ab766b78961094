// White-noise generation, matched-filter SNR, Welch PSD, spectral whitening.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwt/rng.hpp"
#include "gwt/types.hpp"

namespace gwt {

enum class NoiseKind { WhiteGaussian };

struct NoiseModel {
  NoiseKind kind = NoiseKind::WhiteGaussian;
  double sigma = 1.0;  // strain per sample
};

struct PsdEstimate {
  std::vector<double> frequencies;  // Hz, 0 .. Nyquist
  std::vector<double> power;        // strain^2 / Hz, one-sided
  std::size_t segment_length = 0;
};

/// i.i.d. zero-mean Gaussian samples with standard deviation sigma.
TimeSeries white_noise(std::size_t n, double sigma, Rng& rng, double sample_rate = 4096.0);

/// Optimal matched-filter SNR against white noise: ||s||_2 / sigma.
double matched_filter_snr(const TimeSeries& signal, const NoiseModel& noise);
double matched_filter_snr(std::span<const double> samples, double sigma);

/// Rescales the signal so matched_filter_snr equals target_snr.
TimeSeries scale_to_snr(const TimeSeries& signal, double target_snr, const NoiseModel& noise);

/// Welch average of Hann-windowed periodograms, 50% overlap, one-sided.
PsdEstimate estimate_psd(const TimeSeries& series, std::size_t segment_length);

/// Divides the spectrum by sqrt(psd * rate / 2) and removes the DC component
/// (detrend). Unit-variance white noise maps to itself. PSD bins below
/// 1e-10 * max(power) are floored to that value before dividing.
TimeSeries whiten(const TimeSeries& series, const PsdEstimate& psd);

}  // namespace gwt
