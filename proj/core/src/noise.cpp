#include "gwt/noise.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gwt/fft.hpp"

namespace gwt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPsdFloorFraction = 1e-10;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Linear interpolation of the PSD onto frequency f; the estimate's bins are
// strictly increasing from 0 to Nyquist.
double psd_at(const PsdEstimate& psd, double f, double floor_value) {
  const auto& fr = psd.frequencies;
  const auto& pw = psd.power;
  double p;
  if (f <= fr.front()) {
    p = pw.front();
  } else if (f >= fr.back()) {
    p = pw.back();
  } else {
    const auto hi = std::upper_bound(fr.begin(), fr.end(), f);
    const std::size_t k = static_cast<std::size_t>(hi - fr.begin());
    const double w = (f - fr[k - 1]) / (fr[k] - fr[k - 1]);
    p = pw[k - 1] + w * (pw[k] - pw[k - 1]);
  }
  return std::max(p, floor_value);
}

}  // namespace

TimeSeries white_noise(std::size_t n, double sigma, Rng& rng, double sample_rate) {
  if (n < 1) throw std::invalid_argument("white_noise: n must be >= 1");
  if (!(sigma > 0)) throw std::invalid_argument("white_noise: sigma must be positive");
  TimeSeries out;
  out.grid.n_samples = n;
  out.grid.sample_rate = sample_rate;
  out.grid.t0 = 0.0;
  out.samples.resize(n);
  for (double& v : out.samples) v = sigma * rng.normal();
  return out;
}

double matched_filter_snr(std::span<const double> samples, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("matched_filter_snr: sigma must be positive");
  double sum_sq = 0.0;
  for (double v : samples) sum_sq += v * v;
  return std::sqrt(sum_sq) / sigma;
}

double matched_filter_snr(const TimeSeries& signal, const NoiseModel& noise) {
  return matched_filter_snr(std::span<const double>(signal.samples), noise.sigma);
}

TimeSeries scale_to_snr(const TimeSeries& signal, double target_snr, const NoiseModel& noise) {
  if (!(target_snr > 0)) throw std::invalid_argument("scale_to_snr: target_snr must be positive");
  const double rho = matched_filter_snr(signal, noise);
  if (rho == 0.0) throw std::invalid_argument("scale_to_snr: signal is identically zero");
  const double factor = target_snr / rho;
  TimeSeries out = signal;
  for (double& v : out.samples) v *= factor;
  return out;
}

PsdEstimate estimate_psd(const TimeSeries& series, std::size_t segment_length) {
  const std::size_t n = series.samples.size();
  if (!is_power_of_two(segment_length))
    throw std::invalid_argument("estimate_psd: segment_length must be a power of two");
  if (segment_length > n)
    throw std::invalid_argument("estimate_psd: segment_length exceeds series length");

  // Periodic Hann window.
  std::vector<double> window(segment_length);
  double window_power = 0.0;
  for (std::size_t i = 0; i < segment_length; ++i) {
    window[i] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(i) /
                                      static_cast<double>(segment_length)));
    window_power += window[i] * window[i];
  }

  const std::size_t hop = segment_length / 2;
  const std::size_t n_segments = (n - segment_length) / hop + 1;
  const std::size_t n_bins = segment_length / 2 + 1;

  std::vector<double> acc(n_bins, 0.0);
  std::vector<double> buf(segment_length);
  for (std::size_t s = 0; s < n_segments; ++s) {
    const std::size_t off = s * hop;
    for (std::size_t i = 0; i < segment_length; ++i)
      buf[i] = window[i] * series.samples[off + i];
    const auto spec = rfft(buf);
    for (std::size_t k = 0; k < n_bins; ++k) acc[k] += std::norm(spec[k]);
  }

  PsdEstimate psd;
  psd.segment_length = segment_length;
  psd.frequencies.resize(n_bins);
  psd.power.resize(n_bins);
  const double rate = series.grid.sample_rate;
  const double scale = 1.0 / (rate * window_power * static_cast<double>(n_segments));
  for (std::size_t k = 0; k < n_bins; ++k) {
    psd.frequencies[k] = static_cast<double>(k) * rate / static_cast<double>(segment_length);
    // one-sided: interior bins carry the negative-frequency half
    const double one_sided = (k == 0 || k == segment_length / 2) ? 1.0 : 2.0;
    psd.power[k] = one_sided * scale * acc[k];
  }
  return psd;
}

TimeSeries whiten(const TimeSeries& series, const PsdEstimate& psd) {
  const std::size_t n = series.samples.size();
  if (!is_power_of_two(n))
    throw std::invalid_argument("whiten: series length must be a power of two");
  if (psd.frequencies.empty() || psd.frequencies.size() != psd.power.size())
    throw std::invalid_argument("whiten: malformed PSD estimate");

  const double max_power = *std::max_element(psd.power.begin(), psd.power.end());
  if (!(max_power > 0)) throw std::invalid_argument("whiten: PSD is not positive");
  const double floor_value = kPsdFloorFraction * max_power;

  const double rate = series.grid.sample_rate;
  auto spec = rfft(series.samples);
  spec[0] = 0.0;  // detrend: drop the DC component
  for (std::size_t k = 1; k < spec.size(); ++k) {
    const double f = static_cast<double>(k) * rate / static_cast<double>(n);
    const double divisor = std::sqrt(psd_at(psd, f, floor_value) * rate / 2.0);
    if (!(divisor > 0)) throw std::invalid_argument("whiten: nonpositive PSD bin");
    spec[k] /= divisor;
  }
  TimeSeries out;
  out.grid = series.grid;
  out.samples = irfft(spec, n);
  return out;
}

}  // namespace gwt
