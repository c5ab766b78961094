// Core domain types shared across the transient workbench.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gwt {

// Error taxonomy. std::invalid_argument covers contract violations (bad
// parameters, mismatched shapes); FormatError covers malformed files;
// NumericalError covers failed numerics (singular solves, non-finite results).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform sampling grid. t0 is the signal center/onset within the window.
struct TimeGrid {
  std::size_t n_samples = 1024;
  double sample_rate = 4096.0;
  double t0 = 1024 / 2 / 4096.0;

  double dt() const { return 1.0 / sample_rate; }
  double duration() const { return static_cast<double>(n_samples) / sample_rate; }
  double time_at(std::size_t i) const { return static_cast<double>(i) / sample_rate; }

  // n_samples must be a power of two; t0 must lie inside the window.
  void validate() const;

  static TimeGrid centered(std::size_t n_samples, double sample_rate);

  bool operator==(const TimeGrid&) const = default;
};

inline constexpr int kNumClasses = 8;

// Integer codes are the on-disk and label encoding; do not reorder.
enum class TransientClass : std::uint8_t {
  Ringdown = 0,
  SineGaussian = 1,
  Gaussian = 2,
  ChirpingSineGaussian = 3,
  Cusp = 4,
  BlackHoleMerger = 5,
  Blip = 6,
  Supernova = 7,
};

constexpr std::array<TransientClass, kNumClasses> all_classes() {
  return {TransientClass::Ringdown,      TransientClass::SineGaussian,
          TransientClass::Gaussian,      TransientClass::ChirpingSineGaussian,
          TransientClass::Cusp,          TransientClass::BlackHoleMerger,
          TransientClass::Blip,          TransientClass::Supernova};
}

TransientClass class_from_code(int code);

/// Display name used in reports and confusion-matrix headers.
const char* class_name(TransientClass c);

struct GaussianParams {
  double tau = 0.0;
};
struct SineGaussianParams {
  double f0 = 0.0;
  double tau = 0.0;
};
struct RingdownParams {
  double f0 = 0.0;
  double tau = 0.0;
};
struct CsgParams {
  double f0 = 0.0;
  double alpha = 0.0;
  double tau = 0.0;
};
struct CuspParams {
  double f0 = 0.0;
  double amplitude = 1.0;
};
struct MergerParams {
  double chirp_mass = 0.0;
  double cos_iota = 0.0;
};
struct BlipParams {
  double f0 = 0.0;
  double tau = 0.0;
  double clip_fraction = 0.0;
};
struct SupernovaParams {
  int model_id = 0;
};

// Variant order matches the class codes so index() == class code.
using WaveformParams =
    std::variant<RingdownParams, SineGaussianParams, GaussianParams, CsgParams,
                 CuspParams, MergerParams, BlipParams, SupernovaParams>;

/// Throws std::invalid_argument when the params tag does not match the class.
void require_tag(TransientClass c, const WaveformParams& p);

// Fixed-width serialization of a params record: tag byte plus six f64 slots
// in field-declaration order, zero padded.
std::array<double, 6> params_to_slots(const WaveformParams& p);
WaveformParams params_from_slots(std::uint8_t tag, const std::array<double, 6>& slots);

struct TimeSeries {
  std::vector<double> samples;
  TimeGrid grid;
};

}  // namespace gwt
