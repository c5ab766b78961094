#include "gwt/waveforms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "gwt/fft.hpp"

namespace gwt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Gaussian tau list: the eight stated widths, seconds.
constexpr std::array<double, 8> kGaussianTaus = {0.0005, 0.001, 0.0025, 0.005,
                                                 0.0075, 0.01,  0.02,   0.05};

// Merger surrogate constants.
constexpr double kMergerFLow = 30.0;   // Hz, chirp entry frequency
constexpr double kMergerFCap = 700.0;  // Hz, frequency at merger

[[noreturn]] void grid_too_short(TransientClass c) {
  throw std::invalid_argument(std::string("grid too short to contain a ") +
                              class_name(c) + " signal");
}

void check_grid(const TimeGrid& grid) {
  grid.validate();
  if (grid.n_samples < 8)
    throw std::invalid_argument("grid must have at least 8 samples");
}

std::vector<double> eval_gaussian(const GaussianParams& p, const TimeGrid& g) {
  if (!(p.tau > 0)) throw std::invalid_argument("Gaussian: tau must be positive");
  if (g.t0 - p.tau < 0 || g.t0 + p.tau > g.duration())
    grid_too_short(TransientClass::Gaussian);
  std::vector<double> s(g.n_samples);
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    const double u = g.time_at(i) - g.t0;
    s[i] = std::exp(-(u * u) / (p.tau * p.tau));
  }
  return s;
}

std::vector<double> eval_sine_gaussian(const SineGaussianParams& p, const TimeGrid& g) {
  if (!(p.tau > 0) || !(p.f0 > 0))
    throw std::invalid_argument("SineGaussian: f0 and tau must be positive");
  if (g.t0 - p.tau < 0 || g.t0 + p.tau > g.duration())
    grid_too_short(TransientClass::SineGaussian);
  std::vector<double> s(g.n_samples);
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    const double u = g.time_at(i) - g.t0;
    s[i] = std::exp(-(u * u) / (p.tau * p.tau)) * std::sin(kTwoPi * p.f0 * u);
  }
  return s;
}

std::vector<double> eval_ringdown(const RingdownParams& p, const TimeGrid& g) {
  if (!(p.tau > 0) || !(p.f0 > 0))
    throw std::invalid_argument("Ringdown: f0 and tau must be positive");
  if (g.t0 + 0.5 * p.tau > g.duration()) grid_too_short(TransientClass::Ringdown);
  std::vector<double> s(g.n_samples, 0.0);
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    const double u = g.time_at(i) - g.t0;
    if (u < 0) continue;
    s[i] = std::exp(-u / p.tau) * std::cos(kTwoPi * p.f0 * u);
  }
  return s;
}

std::vector<double> eval_csg(const CsgParams& p, const TimeGrid& g) {
  if (!(p.tau > 0) || !(p.f0 > 0))
    throw std::invalid_argument("ChirpingSineGaussian: f0 and tau must be positive");
  if (g.t0 - p.tau < 0 || g.t0 + p.tau > g.duration())
    grid_too_short(TransientClass::ChirpingSineGaussian);
  // Real part of exp(-(1 - i*alpha) u^2 / (4 tau^2) + 2 pi i f0 u) / (2 pi tau^2)^(1/4)
  const double norm = std::pow(kTwoPi * p.tau * p.tau, -0.25);
  const double q = 1.0 / (4.0 * p.tau * p.tau);
  std::vector<double> s(g.n_samples);
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    const double u = g.time_at(i) - g.t0;
    const double u2q = u * u * q;
    s[i] = norm * std::exp(-u2q) * std::cos(p.alpha * u2q + kTwoPi * p.f0 * u);
  }
  return s;
}

std::vector<double> eval_cusp(const CuspParams& p, const TimeGrid& g) {
  if (!(p.f0 > 0)) throw std::invalid_argument("Cusp: f0 must be positive");
  const std::size_t n = g.n_samples;
  // |H(f)| = A f^(-4/3) up to f0, exponential roll-off above; zero phase.
  std::vector<std::complex<double>> spec(n / 2 + 1, 0.0);
  const double df = g.sample_rate / static_cast<double>(n);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) * df;
    const double mag = (f <= p.f0)
                           ? p.amplitude * std::pow(f, -4.0 / 3.0)
                           : p.amplitude * std::pow(p.f0, -4.0 / 3.0) *
                                 std::exp(1.0 - f / p.f0);
    spec[k] = mag;
  }
  std::vector<double> burst = irfft(spec, n);
  // Zero-phase spectrum peaks at sample 0; rotate the peak onto t0.
  const std::size_t shift =
      static_cast<std::size_t>(std::llround(g.t0 * g.sample_rate)) % n;
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[(i + shift) % n] = burst[i];
  return s;
}

// Newtonian chirp stitched to a damped ringdown, C1 at the merger.
std::vector<double> eval_merger(const MergerParams& p, const TimeGrid& g) {
  if (!(p.chirp_mass > 0)) throw std::invalid_argument("Merger: chirp_mass must be positive");
  if (p.cos_iota < 0 || p.cos_iota > 1)
    throw std::invalid_argument("Merger: cos_iota must lie in [0, 1]");
  const double tau_r = 4.0 / kMergerFCap;
  if (!(g.t0 > 0) || g.t0 + tau_r > g.duration())
    grid_too_short(TransientClass::BlackHoleMerger);

  // Chirp duration scales as chirp_mass^(-5/3), anchored so the lightest
  // allowed system (20 Msun) nearly fills the pre-merger window.
  const double t_peak = g.t0;
  const double chirp_dur = 0.96 * g.t0 * std::pow(20.0 / p.chirp_mass, 5.0 / 3.0);
  const double t_start = t_peak - chirp_dur;
  const double ratio = std::pow(kMergerFCap / kMergerFLow, -8.0 / 3.0);
  const double t_c = (t_peak - ratio * t_start) / (1.0 - ratio);
  const double span = t_c - t_start;  // f(t) = f_low ((t_c - t)/span)^(-3/8)
  const double incl = 0.5 * (1.0 + p.cos_iota * p.cos_iota);

  const auto freq = [&](double t) {
    return kMergerFLow * std::pow((t_c - t) / span, -3.0 / 8.0);
  };
  const auto phase = [&](double t) {
    // 2 pi integral of freq, zero at t_start
    return (8.0 * kTwoPi / 5.0) * kMergerFLow * std::pow(span, 3.0 / 8.0) *
           (std::pow(span, 5.0 / 8.0) - std::pow(t_c - t, 5.0 / 8.0));
  };
  const auto amp = [&](double t) {
    return incl * std::pow(freq(t) / kMergerFLow, 2.0 / 3.0);
  };

  // Ringdown matched to the chirp's value and slope at the merger.
  const double phi_p = phase(t_peak);
  const double a_p = amp(t_peak);
  const double v0 = a_p * std::cos(phi_p);
  const double da_p = a_p / (4.0 * (t_c - t_peak));
  const double v1 = da_p * std::cos(phi_p) - a_p * kTwoPi * kMergerFCap * std::sin(phi_p);
  const double c_cos = v0;
  const double c_sin = -(v1 + v0 / tau_r) / (kTwoPi * kMergerFCap);
  const double ring_amp = std::hypot(c_cos, c_sin);
  const double ring_phase = std::atan2(c_sin, c_cos);

  std::vector<double> s(g.n_samples, 0.0);
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    const double t = g.time_at(i);
    if (t < t_start) continue;
    if (t < t_peak) {
      s[i] = amp(t) * std::cos(phase(t));
    } else {
      const double u = t - t_peak;
      s[i] = ring_amp * std::exp(-u / tau_r) *
             std::cos(kTwoPi * kMergerFCap * u + ring_phase);
    }
  }
  return s;
}

std::vector<double> eval_blip(const BlipParams& p, const TimeGrid& g) {
  TimeSeries sg;
  sg.samples = eval_sine_gaussian(SineGaussianParams{p.f0, p.tau}, g);
  sg.grid = g;
  return clip_blip(sg, p.clip_fraction).samples;
}

}  // namespace

SupernovaCatalog SupernovaCatalog::analytic_family(std::size_t count) {
  if (count == 0) throw std::invalid_argument("supernova family must be non-empty");
  SupernovaCatalog cat;
  cat.surrogates_.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    SurrogateSpec spec{};
    const double frac = count > 1 ? static_cast<double>(m) / static_cast<double>(count - 1) : 0.0;
    const std::size_t iw = m % 6;
    const std::size_t jf = (m / 6) % 13;
    spec.dip_width = 0.5e-3 * std::pow(10.0, static_cast<double>(iw) / 5.0);
    spec.osc_freq = 100.0 + 700.0 * static_cast<double>(jf) / 12.0;
    spec.damping_tau = 5e-3 * std::pow(6.0, frac);
    cat.surrogates_.push_back(spec);
  }
  return cat;
}

SupernovaCatalog SupernovaCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open supernova catalog: " + path);
  SupernovaCatalog cat;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long id = 0;
    double rate = 0.0;
    if (!(fields >> id >> rate) || !(rate > 0))
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": expected `model_id sample_rate_hz v0 v1 ...`");
    Template tpl;
    tpl.sample_rate = rate;
    double v = 0.0;
    while (fields >> v) tpl.samples.push_back(v);
    if (!fields.eof())
      throw FormatError(path + ":" + std::to_string(line_no) + ": malformed sample value");
    if (tpl.samples.empty())
      throw FormatError(path + ":" + std::to_string(line_no) + ": waveform has no samples");
    cat.templates_.push_back(std::move(tpl));
  }
  if (cat.templates_.empty())
    throw std::invalid_argument("supernova catalog is empty: " + path);
  return cat;
}

std::size_t SupernovaCatalog::size() const {
  return templates_.empty() ? surrogates_.size() : templates_.size();
}

std::vector<double> SupernovaCatalog::waveform_on_grid(int model_id,
                                                       const TimeGrid& grid) const {
  if (model_id < 0 || static_cast<std::size_t>(model_id) >= size())
    throw std::invalid_argument("supernova model_id out of range: " +
                                std::to_string(model_id));
  check_grid(grid);

  if (templates_.empty()) {
    // Analytic core-bounce surrogate: narrow negative dip at t0 followed by a
    // damped oscillation.
    const SurrogateSpec& sp = surrogates_[static_cast<std::size_t>(model_id)];
    std::vector<double> s(grid.n_samples);
    for (std::size_t i = 0; i < grid.n_samples; ++i) {
      const double u = grid.time_at(i) - grid.t0;
      double v = -std::exp(-(u * u) / (sp.dip_width * sp.dip_width));
      if (u > 0)
        v += 0.6 * std::sin(kTwoPi * sp.osc_freq * u) * std::exp(-u / sp.damping_tau);
      s[i] = v;
    }
    return s;
  }

  const Template& tpl = templates_[static_cast<std::size_t>(model_id)];
  // Resample to the grid rate by linear interpolation.
  const std::size_t old_n = tpl.samples.size();
  const auto new_n = static_cast<std::size_t>(std::max<long long>(
      1, std::llround(static_cast<double>(old_n) * grid.sample_rate / tpl.sample_rate)));
  std::vector<double> res(new_n);
  for (std::size_t j = 0; j < new_n; ++j) {
    const double pos = static_cast<double>(j) * tpl.sample_rate / grid.sample_rate;
    const auto i0 = static_cast<std::size_t>(pos);
    if (i0 + 1 >= old_n) {
      res[j] = tpl.samples[old_n - 1];
    } else {
      const double frac = pos - static_cast<double>(i0);
      res[j] = tpl.samples[i0] + frac * (tpl.samples[i0 + 1] - tpl.samples[i0]);
    }
  }
  // Align the template's peak |v| with t0; zero-pad/crop to the window.
  std::size_t peak = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < new_n; ++j) {
    if (std::abs(res[j]) > best) {
      best = std::abs(res[j]);
      peak = j;
    }
  }
  const auto target = static_cast<long long>(std::llround(grid.t0 * grid.sample_rate));
  const long long offset = target - static_cast<long long>(peak);
  std::vector<double> s(grid.n_samples, 0.0);
  for (std::size_t j = 0; j < new_n; ++j) {
    const long long k = static_cast<long long>(j) + offset;
    if (k >= 0 && k < static_cast<long long>(grid.n_samples))
      s[static_cast<std::size_t>(k)] = res[j];
  }
  return s;
}

WaveformParams sample_params(TransientClass c, Rng& rng, std::size_t n_supernova_models) {
  switch (c) {
    case TransientClass::Ringdown: {
      const double f0 = rng.log_uniform(100.0, 2000.0);
      return RingdownParams{f0, 4.0 / f0};
    }
    case TransientClass::SineGaussian: {
      const double f0 = rng.log_uniform(100.0, 2000.0);
      return SineGaussianParams{f0, 2.0 / f0};
    }
    case TransientClass::Gaussian:
      return GaussianParams{kGaussianTaus[rng.uniform_int(kGaussianTaus.size())]};
    case TransientClass::ChirpingSineGaussian: {
      const double f0 = rng.uniform(5.0, 100.0);
      const double alpha = rng.uniform(10.0, 100.0);
      const double tau = rng.uniform(0.001, 0.025);
      return CsgParams{f0, alpha, tau};
    }
    case TransientClass::Cusp:
      return CuspParams{rng.uniform(50.0, 2000.0), 1.0};
    case TransientClass::BlackHoleMerger: {
      const double mc = rng.uniform(20.0, 50.0);
      const double ci = rng.uniform(0.0, 1.0);
      return MergerParams{mc, ci};
    }
    case TransientClass::Blip: {
      const double f0 = rng.log_uniform(100.0, 2000.0);
      return BlipParams{f0, 2.0 / f0, rng.uniform(0.05, 0.25)};
    }
    case TransientClass::Supernova: {
      if (n_supernova_models == 0)
        throw std::invalid_argument("no supernova models available");
      return SupernovaParams{static_cast<int>(rng.uniform_int(n_supernova_models))};
    }
  }
  throw std::invalid_argument("unknown transient class code");
}

std::vector<double> raw_waveform(TransientClass c, const WaveformParams& params,
                                 const TimeGrid& grid, const SupernovaCatalog* catalog) {
  require_tag(c, params);
  check_grid(grid);
  switch (c) {
    case TransientClass::Ringdown:
      return eval_ringdown(std::get<RingdownParams>(params), grid);
    case TransientClass::SineGaussian:
      return eval_sine_gaussian(std::get<SineGaussianParams>(params), grid);
    case TransientClass::Gaussian:
      return eval_gaussian(std::get<GaussianParams>(params), grid);
    case TransientClass::ChirpingSineGaussian:
      return eval_csg(std::get<CsgParams>(params), grid);
    case TransientClass::Cusp:
      return eval_cusp(std::get<CuspParams>(params), grid);
    case TransientClass::BlackHoleMerger:
      return eval_merger(std::get<MergerParams>(params), grid);
    case TransientClass::Blip:
      return eval_blip(std::get<BlipParams>(params), grid);
    case TransientClass::Supernova: {
      if (catalog == nullptr)
        throw std::invalid_argument("supernova synthesis requires a catalog");
      return catalog->waveform_on_grid(std::get<SupernovaParams>(params).model_id, grid);
    }
  }
  throw std::invalid_argument("unknown transient class code");
}

TimeSeries synthesize(TransientClass c, const WaveformParams& params, const TimeGrid& grid,
                      const SupernovaCatalog* catalog) {
  TimeSeries out;
  out.grid = grid;
  out.samples = raw_waveform(c, params, grid, catalog);
  double peak = 0.0;
  for (double v : out.samples) {
    if (!std::isfinite(v)) throw NumericalError("synthesized waveform is not finite");
    peak = std::max(peak, std::abs(v));
  }
  if (peak == 0.0) throw NumericalError("synthesized waveform is identically zero");
  for (double& v : out.samples) v /= peak;
  return out;
}

TimeSeries clip_blip(const TimeSeries& sg, double clip_fraction) {
  if (!(clip_fraction > 0.0) || !(clip_fraction < 1.0))
    throw std::invalid_argument("clip_fraction must lie in (0, 1)");
  double peak = 0.0;
  for (double v : sg.samples) peak = std::max(peak, std::abs(v));
  const double level = clip_fraction * peak;
  TimeSeries out = sg;
  for (double& v : out.samples) v = std::clamp(v, -level, level);
  return out;
}

Synthesizer::Synthesizer(TimeGrid grid, const std::optional<std::string>& supernova_catalog)
    : grid_(grid),
      catalog_(supernova_catalog ? SupernovaCatalog::load(*supernova_catalog)
                                 : SupernovaCatalog::analytic_family()) {
  grid_.validate();
}

WaveformParams Synthesizer::sample_params(TransientClass c, Rng& rng) const {
  return gwt::sample_params(c, rng, catalog_.size());
}

TimeSeries Synthesizer::synthesize(TransientClass c, const WaveformParams& params) const {
  return gwt::synthesize(c, params, grid_, &catalog_);
}

}  // namespace gwt
