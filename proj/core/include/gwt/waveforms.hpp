// Synthesis of the eight transient classes on a uniform time grid.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwt/rng.hpp"
#include "gwt/types.hpp"

namespace gwt {

/// Supernova template source: either a plain-text catalog file or the
/// built-in 78-member analytic core-bounce surrogate family.
///
/// Catalog file format: one waveform per line,
///   model_id sample_rate_hz v0 v1 v2 ...
/// with `#` comment lines ignored.
class SupernovaCatalog {
 public:
  static constexpr std::size_t kSurrogateCount = 78;

  static SupernovaCatalog analytic_family(std::size_t count = kSurrogateCount);
  static SupernovaCatalog load(const std::string& path);

  std::size_t size() const;

  /// Template resampled to the grid rate and centered (peak |v|) at grid.t0.
  /// Not amplitude-normalized.
  std::vector<double> waveform_on_grid(int model_id, const TimeGrid& grid) const;

 private:
  struct SurrogateSpec {
    double dip_width;   // s
    double osc_freq;    // Hz
    double damping_tau; // s
  };
  struct Template {
    double sample_rate;
    std::vector<double> samples;
  };

  std::vector<SurrogateSpec> surrogates_;
  std::vector<Template> templates_;  // non-empty iff loaded from file
};

/// Draws class parameters from the stated ranges. Draw order within a class
/// is fixed; identical (class, rng state) gives identical params.
WaveformParams sample_params(TransientClass c, Rng& rng,
                             std::size_t n_supernova_models = SupernovaCatalog::kSurrogateCount);

/// Direct evaluation of the class formula on the grid, without peak
/// normalization. Supernova requires a catalog.
std::vector<double> raw_waveform(TransientClass c, const WaveformParams& params,
                                 const TimeGrid& grid,
                                 const SupernovaCatalog* catalog = nullptr);

/// raw_waveform followed by peak |s| normalization to 1.
TimeSeries synthesize(TransientClass c, const WaveformParams& params, const TimeGrid& grid,
                      const SupernovaCatalog* catalog = nullptr);

/// Hard-limits samples to +/- clip_fraction * max|sg|.
TimeSeries clip_blip(const TimeSeries& sg, double clip_fraction);

/// Grid-bound synthesis front end owning the supernova template source.
class Synthesizer {
 public:
  explicit Synthesizer(TimeGrid grid,
                       const std::optional<std::string>& supernova_catalog = {});

  const TimeGrid& grid() const { return grid_; }
  const SupernovaCatalog& catalog() const { return catalog_; }

  WaveformParams sample_params(TransientClass c, Rng& rng) const;
  TimeSeries synthesize(TransientClass c, const WaveformParams& params) const;

 private:
  TimeGrid grid_;
  SupernovaCatalog catalog_;
};

}  // namespace gwt
