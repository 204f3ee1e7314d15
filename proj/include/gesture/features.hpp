#pragma once

#include <array>
#include <stdexcept>

#include "gesture/image.hpp"

namespace gesture {

inline constexpr int kGrayLevels = 256;
inline constexpr std::size_t kFeatureCount = 6;

/// Normalised gray-level histogram p(i) of a region.
struct Histogram {
  std::array<double, kGrayLevels> p{};
};

/// First-order histogram statistics. Kurtosis is excess kurtosis (minus 3).
struct FeatureVector {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
  double energy = 0.0;
  double entropy = 0.0;

  std::array<double, kFeatureCount> as_array() const noexcept {
    return {mean, variance, skewness, kurtosis, energy, entropy};
  }
  static FeatureVector from_array(const std::array<double, kFeatureCount>& v) noexcept {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "mean", "variance", "skewness", "kurtosis", "energy", "entropy"};

/// The mask selects no pixel, so the region has no statistics.
class EmptyRegionError : public std::runtime_error {
 public:
  EmptyRegionError() : std::runtime_error("segmented region is empty") {}
};

Histogram region_histogram(const GrayImage& image, const BinaryMask& mask);

/// Mean, variance, skewness, kurtosis - 3, energy and entropy (bits) of `hist`.
/// A zero-variance histogram reports skewness = kurtosis = 0; 0 log 0 is 0.
FeatureVector extract_features(const Histogram& hist);

inline FeatureVector features_of_region(const GrayImage& image, const BinaryMask& mask) {
  return extract_features(region_histogram(image, mask));
}

}  // namespace gesture
