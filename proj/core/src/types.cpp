#include "gwt/types.hpp"

namespace gwt {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void TimeGrid::validate() const {
  if (!is_power_of_two(n_samples))
    throw std::invalid_argument("TimeGrid: n_samples must be a power of two, got " +
                                std::to_string(n_samples));
  if (!(sample_rate > 0.0))
    throw std::invalid_argument("TimeGrid: sample_rate must be positive");
  if (!(t0 >= 0.0) || !(t0 < duration()))
    throw std::invalid_argument("TimeGrid: t0 must lie in [0, duration)");
}

TimeGrid TimeGrid::centered(std::size_t n_samples, double sample_rate) {
  TimeGrid g;
  g.n_samples = n_samples;
  g.sample_rate = sample_rate;
  g.t0 = static_cast<double>(n_samples / 2) / sample_rate;
  g.validate();
  return g;
}

TransientClass class_from_code(int code) {
  if (code < 0 || code >= kNumClasses)
    throw std::invalid_argument("unknown transient class code " + std::to_string(code));
  return static_cast<TransientClass>(code);
}

const char* class_name(TransientClass c) {
  switch (c) {
    case TransientClass::Ringdown: return "Ring Gaussian";
    case TransientClass::SineGaussian: return "Sine Gaussian";
    case TransientClass::Gaussian: return "Gaussian";
    case TransientClass::ChirpingSineGaussian: return "Chirping Sine Gaussian";
    case TransientClass::Cusp: return "Cusp";
    case TransientClass::BlackHoleMerger: return "Binary Black Hole Merger";
    case TransientClass::Blip: return "Blip";
    case TransientClass::Supernova: return "Supernova";
  }
  throw std::invalid_argument("unknown transient class");
}

void require_tag(TransientClass c, const WaveformParams& p) {
  if (p.index() != static_cast<std::size_t>(c))
    throw std::invalid_argument("waveform params tag does not match class " +
                                std::string(class_name(c)));
}

std::array<double, 6> params_to_slots(const WaveformParams& p) {
  std::array<double, 6> s{};
  std::visit(
      [&s](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RingdownParams>) {
          s[0] = v.f0;
          s[1] = v.tau;
        } else if constexpr (std::is_same_v<T, SineGaussianParams>) {
          s[0] = v.f0;
          s[1] = v.tau;
        } else if constexpr (std::is_same_v<T, GaussianParams>) {
          s[0] = v.tau;
        } else if constexpr (std::is_same_v<T, CsgParams>) {
          s[0] = v.f0;
          s[1] = v.alpha;
          s[2] = v.tau;
        } else if constexpr (std::is_same_v<T, CuspParams>) {
          s[0] = v.f0;
          s[1] = v.amplitude;
        } else if constexpr (std::is_same_v<T, MergerParams>) {
          s[0] = v.chirp_mass;
          s[1] = v.cos_iota;
        } else if constexpr (std::is_same_v<T, BlipParams>) {
          s[0] = v.f0;
          s[1] = v.tau;
          s[2] = v.clip_fraction;
        } else if constexpr (std::is_same_v<T, SupernovaParams>) {
          s[0] = static_cast<double>(v.model_id);
        }
      },
      p);
  return s;
}

WaveformParams params_from_slots(std::uint8_t tag, const std::array<double, 6>& s) {
  switch (static_cast<TransientClass>(tag)) {
    case TransientClass::Ringdown: return RingdownParams{s[0], s[1]};
    case TransientClass::SineGaussian: return SineGaussianParams{s[0], s[1]};
    case TransientClass::Gaussian: return GaussianParams{s[0]};
    case TransientClass::ChirpingSineGaussian: return CsgParams{s[0], s[1], s[2]};
    case TransientClass::Cusp: return CuspParams{s[0], s[1]};
    case TransientClass::BlackHoleMerger: return MergerParams{s[0], s[1]};
    case TransientClass::Blip: return BlipParams{s[0], s[1], s[2]};
    case TransientClass::Supernova: return SupernovaParams{static_cast<int>(s[0])};
  }
  throw FormatError("bad waveform params tag " + std::to_string(int(tag)));
}

}  // namespace gwt
