#include "gwt/dataset.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "gwt/noise.hpp"
#include "gwt/threading.hpp"
#include "gwt/waveforms.hpp"

namespace gwt {

namespace {

constexpr char kMagic[4] = {'G', 'W', 'T', 'D'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint64_t kPsdStreamTag = 0x505344;  // distinct from class codes
constexpr std::size_t kPsdStreamSamples = std::size_t{1} << 20;

// --- little-endian binary helpers ---------------------------------------

class ByteWriter {
 public:
  explicit ByteWriter(std::ostream& out) : out_(out) {}

  void put_bytes(const char* p, std::size_t n) { out_.write(p, static_cast<std::streamsize>(n)); }
  void put_u8(std::uint8_t v) { put_bytes(reinterpret_cast<const char*>(&v), 1); }
  void put_u16(std::uint16_t v) { put_uint(v, 2); }
  void put_u32(std::uint32_t v) { put_uint(v, 4); }
  void put_u64(std::uint64_t v) { put_uint(v, 8); }
  void put_f64(double v) { put_u64(std::bit_cast<std::uint64_t>(v)); }
  void put_f32(float v) { put_u32(std::bit_cast<std::uint32_t>(v)); }

 private:
  void put_uint(std::uint64_t v, int n_bytes) {
    char buf[8];
    for (int i = 0; i < n_bytes; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    put_bytes(buf, static_cast<std::size_t>(n_bytes));
  }

  std::ostream& out_;
};

class ByteReader {
 public:
  ByteReader(std::istream& in, std::string path) : in_(in), path_(std::move(path)) {}

  std::size_t offset() const { return offset_; }

  void get_bytes(char* p, std::size_t n) {
    in_.read(p, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n)
      throw FormatError(path_ + ": truncated at byte offset " + std::to_string(offset_));
    offset_ += n;
  }
  std::uint8_t get_u8() {
    char b;
    get_bytes(&b, 1);
    return static_cast<std::uint8_t>(b);
  }
  std::uint16_t get_u16() { return static_cast<std::uint16_t>(get_uint(2)); }
  std::uint32_t get_u32() { return static_cast<std::uint32_t>(get_uint(4)); }
  std::uint64_t get_u64() { return get_uint(8); }
  double get_f64() { return std::bit_cast<double>(get_u64()); }
  float get_f32() { return std::bit_cast<float>(get_u32()); }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError(path_ + ": " + what + " at byte offset " + std::to_string(offset_));
  }

 private:
  std::uint64_t get_uint(int n_bytes) {
    char buf[8];
    get_bytes(buf, static_cast<std::size_t>(n_bytes));
    std::uint64_t v = 0;
    for (int i = 0; i < n_bytes; ++i)
      v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf[i])) << (8 * i);
    return v;
  }

  std::istream& in_;
  std::string path_;
  std::size_t offset_ = 0;
};

std::vector<double> standardized(std::vector<double> x) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= n;
  if (!(var > 0)) throw NumericalError("cannot standardize a constant example");
  const double inv_std = 1.0 / std::sqrt(var);
  for (double& v : x) v = (v - mean) * inv_std;
  return x;
}

}  // namespace

void DatasetConfig::validate() const {
  if (per_class < 1) throw std::invalid_argument("per_class must be >= 1");
  if (!(snr_min > 0) || !(snr_min <= snr_max))
    throw std::invalid_argument("require 0 < snr_min <= snr_max");
  grid.validate();
}

Dataset build_dataset(const DatasetConfig& config) {
  config.validate();
  const Synthesizer synth(config.grid, config.supernova_catalog);
  const NoiseModel noise{NoiseKind::WhiteGaussian, 1.0};

  // Whitening PSD: one long noise-only stream per build.
  Rng psd_rng(mix_seed(config.master_seed, kPsdStreamTag, 0));
  const TimeSeries psd_stream =
      white_noise(kPsdStreamSamples, noise.sigma, psd_rng, config.grid.sample_rate);
  const PsdEstimate psd = estimate_psd(psd_stream, config.grid.n_samples);

  Dataset ds;
  ds.grid = config.grid;
  ds.master_seed = config.master_seed;
  ds.per_class = config.per_class;
  ds.examples.resize(kNumClasses * config.per_class);

  parallel_for(ds.examples.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto class_code = static_cast<std::uint64_t>(k / config.per_class);
      const auto index = static_cast<std::uint64_t>(k % config.per_class);
      const auto cls = static_cast<TransientClass>(class_code);

      // Fixed draw order: params, target SNR, noise.
      Rng rng(mix_seed(config.master_seed, class_code, index));
      const WaveformParams params = synth.sample_params(cls, rng);
      const TimeSeries wave = synth.synthesize(cls, params);
      const double target_snr = rng.uniform(config.snr_min, config.snr_max);
      TimeSeries noisy = scale_to_snr(wave, target_snr, noise);
      for (double& v : noisy.samples) v += noise.sigma * rng.normal();
      const TimeSeries whitened = whiten(noisy, psd);

      LabeledExample& ex = ds.examples[k];
      ex.x = standardized(whitened.samples);
      ex.label = cls;
      ex.target_snr = target_snr;
      ex.params = params;
    }
  });
  return ds;
}

std::pair<Dataset, Dataset> holdout_split(const Dataset& ds, double train_fraction,
                                          std::uint64_t seed) {
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
    throw std::invalid_argument("train_fraction must lie in (0, 1)");

  std::array<std::vector<std::size_t>, kNumClasses> by_class;
  for (std::size_t i = 0; i < ds.examples.size(); ++i)
    by_class[static_cast<std::size_t>(ds.examples[i].label)].push_back(i);

  Dataset train, test;
  train.grid = test.grid = ds.grid;
  train.master_seed = test.master_seed = ds.master_seed;

  std::size_t train_per_class = 0, test_per_class = 0;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    auto& idx = by_class[c];
    if (idx.empty()) continue;
    const auto n_train =
        static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(idx.size())));
    if (n_train == 0 || n_train == idx.size())
      throw std::invalid_argument("split leaves an empty side for class " +
                                  std::string(class_name(static_cast<TransientClass>(c))));
    Rng rng(mix_seed(seed, c, 0));
    for (std::size_t i = idx.size() - 1; i > 0; --i)
      std::swap(idx[i], idx[rng.uniform_int(i + 1)]);
    for (std::size_t i = 0; i < idx.size(); ++i)
      (i < n_train ? train : test).examples.push_back(ds.examples[idx[i]]);
    train_per_class = n_train;
    test_per_class = idx.size() - n_train;
  }
  train.per_class = train_per_class;
  test.per_class = test_per_class;
  return {std::move(train), std::move(test)};
}

void write_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open for writing: " + path);
  ByteWriter w(out);
  w.put_bytes(kMagic, 4);
  w.put_u16(kVersion);
  w.put_u32(static_cast<std::uint32_t>(ds.examples.size()));
  w.put_u32(static_cast<std::uint32_t>(ds.grid.n_samples));
  w.put_f64(ds.grid.sample_rate);
  w.put_u64(ds.master_seed);
  for (const auto& ex : ds.examples) {
    if (ex.x.size() != ds.grid.n_samples)
      throw std::invalid_argument("example length does not match dataset grid");
    w.put_u8(static_cast<std::uint8_t>(ex.label));
    w.put_f64(ex.target_snr);
    w.put_u8(static_cast<std::uint8_t>(ex.params.index()));
    for (double slot : params_to_slots(ex.params)) w.put_f64(slot);
    for (double v : ex.x) w.put_f32(static_cast<float>(v));
  }
  if (!out) throw FormatError("write failed: " + path);
}

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open dataset: " + path);
  ByteReader r(in, path);

  char magic[4];
  r.get_bytes(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) r.fail("bad magic (not a GWTD file)");
  const std::uint16_t version = r.get_u16();
  if (version != kVersion) r.fail("unsupported version " + std::to_string(version));
  const std::uint32_t n_examples = r.get_u32();
  const std::uint32_t n_samples = r.get_u32();
  const double sample_rate = r.get_f64();
  const std::uint64_t master_seed = r.get_u64();
  if (n_samples == 0 || !(sample_rate > 0)) r.fail("bad header");

  Dataset ds;
  ds.grid = TimeGrid::centered(n_samples, sample_rate);
  ds.master_seed = master_seed;
  ds.per_class = n_examples % kNumClasses == 0 ? n_examples / kNumClasses : 0;
  ds.examples.resize(n_examples);
  for (auto& ex : ds.examples) {
    const std::uint8_t label = r.get_u8();
    if (label >= kNumClasses) r.fail("label out of range");
    ex.label = static_cast<TransientClass>(label);
    ex.target_snr = r.get_f64();
    const std::uint8_t tag = r.get_u8();
    std::array<double, 6> slots{};
    for (double& s : slots) s = r.get_f64();
    ex.params = params_from_slots(tag, slots);
    ex.x.resize(n_samples);
    for (double& v : ex.x) v = static_cast<double>(r.get_f32());
  }
  return ds;
}

void export_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open for writing: " + path);
  out << "label,snr";
  for (std::size_t i = 0; i < ds.grid.n_samples; ++i) out << ",s" << i;
  out << "\n";
  char buf[64];
  for (const auto& ex : ds.examples) {
    out << static_cast<int>(ex.label);
    std::snprintf(buf, sizeof(buf), ",%.9g", ex.target_snr);
    out << buf;
    for (double v : ex.x) {
      std::snprintf(buf, sizeof(buf), ",%.9g", v);
      out << buf;
    }
    out << "\n";
  }
  if (!out) throw FormatError("write failed: " + path);
}

Eigen::MatrixXd feature_matrix(const Dataset& ds) {
  const std::size_t rows = ds.examples.size();
  const std::size_t cols = rows == 0 ? 0 : ds.examples[0].x.size();
  Eigen::MatrixXd x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ds.examples[i].x[j];
  return x;
}

std::vector<int> label_vector(const Dataset& ds) {
  std::vector<int> y(ds.examples.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<int>(ds.examples[i].label);
  return y;
}

}  // namespace gwt
