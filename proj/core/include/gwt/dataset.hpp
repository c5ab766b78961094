// Labeled dataset assembly, persistence, and splitting.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gwt/types.hpp"

namespace gwt {

struct LabeledExample {
  std::vector<double> x;  // whitened, per-example standardized
  TransientClass label = TransientClass::Ringdown;
  double target_snr = 0.0;
  WaveformParams params;
};

struct Dataset {
  std::vector<LabeledExample> examples;
  TimeGrid grid;
  std::uint64_t master_seed = 0;
  std::size_t per_class = 0;
};

struct DatasetConfig {
  std::size_t per_class = 800;
  double snr_min = 5.0;
  double snr_max = 25.0;
  TimeGrid grid;
  std::uint64_t master_seed = 42;
  std::optional<std::string> supernova_catalog;

  void validate() const;
};

/// Generates per_class examples for each of the eight classes, class-major.
/// Per-example streams are derived from (master_seed, class, index), so the
/// result is byte-identical whether built serially or in parallel.
Dataset build_dataset(const DatasetConfig& config);

/// Stratified split: floor(train_fraction * per_class) per class to train,
/// the rest to test, shuffled within class by seed.
std::pair<Dataset, Dataset> holdout_split(const Dataset& ds, double train_fraction,
                                          std::uint64_t seed);

// Binary container, little-endian. Header: magic `GWTD`, u16 version=1,
// u32 n_examples, u32 n_samples, f64 sample_rate, u64 master_seed. Records:
// u8 label, f64 target_snr, u8 params_tag, 6 x f64 param slots, samples f32.
void write_dataset(const Dataset& ds, const std::string& path);
Dataset read_dataset(const std::string& path);

/// CSV with header `label,snr,s0,...,s{n-1}`, 9 significant digits.
void export_csv(const Dataset& ds, const std::string& path);

/// Row-per-example feature matrix and label vector views used by classifiers.
Eigen::MatrixXd feature_matrix(const Dataset& ds);
std::vector<int> label_vector(const Dataset& ds);

}  // namespace gwt
