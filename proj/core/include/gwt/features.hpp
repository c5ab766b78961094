// Unsupervised preprocessing: total-variation denoising, PCA, Haar wavelets.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gwt/types.hpp"

namespace gwt {

/// Exact minimizer of 1/2 ||y - x||^2 + lambda * sum |y[i+1] - y[i]|
/// (direct 1-D taut-string pass, O(n)).
std::vector<double> tv_denoise(const std::vector<double>& x, double lambda);

struct PcaModel {
  Eigen::VectorXd mean;
  Eigen::MatrixXd components;          // k x d, rows orthonormal
  Eigen::VectorXd explained_variance;  // nonincreasing

  Eigen::Index dim() const { return mean.size(); }
  Eigen::Index k() const { return components.rows(); }
};

/// Top-k eigenpairs of the sample covariance of X (rows = examples).
/// Sign convention: the largest-magnitude entry of each component is positive.
PcaModel pca_fit(const Eigen::MatrixXd& x, std::size_t k);

/// Coefficients of (x - mean) in the component basis.
Eigen::VectorXd pca_project(const PcaModel& model, const Eigen::VectorXd& x);
Eigen::MatrixXd pca_project(const PcaModel& model, const Eigen::MatrixXd& x);

struct WaveletCoeffs {
  std::vector<double> approximation;
  std::vector<std::vector<double>> details;  // details[0] = finest level
  std::size_t levels = 0;
};

/// Orthonormal Haar analysis; length must be divisible by 2^levels.
WaveletCoeffs haar_dwt(const std::vector<double>& x, std::size_t levels);
std::vector<double> haar_idwt(const WaveletCoeffs& coeffs);

/// Flat layout [approximation | coarsest detail | ... | finest detail].
std::vector<double> wavelet_feature_vector(const WaveletCoeffs& coeffs);

// --- composable preprocessing used by the classifiers ---------------------

enum class FeatureKind : std::uint8_t { None = 0, Tv = 1, Pca = 2, Dwt = 3 };

FeatureKind feature_kind_from_name(const std::string& name);
const char* feature_kind_name(FeatureKind kind);

struct FeatureConfig {
  FeatureKind kind = FeatureKind::None;
  double tv_lambda = 0.5;
  std::size_t pca_components = 64;
  std::size_t dwt_levels = 5;
};

/// Fitted, immutable transform. Fit on training data only, then apply to any
/// matrix with the same input width.
class FeaturePipeline {
 public:
  FeaturePipeline() = default;

  static FeaturePipeline fit(const FeatureConfig& config, const Eigen::MatrixXd& train_x);

  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;

  const FeatureConfig& config() const { return config_; }
  const PcaModel& pca() const { return pca_; }
  Eigen::Index input_width() const { return input_width_; }
  Eigen::Index output_width() const;

  /// Restores a fitted pipeline from persisted state (model files).
  static FeaturePipeline restore(const FeatureConfig& config, Eigen::Index input_width,
                                 PcaModel pca);

 private:
  FeatureConfig config_;
  Eigen::Index input_width_ = 0;
  PcaModel pca_;  // populated only for FeatureKind::Pca
};

}  // namespace gwt
