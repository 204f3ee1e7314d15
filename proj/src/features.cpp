#include "gesture/features.hpp"

#include <cmath>

namespace gesture {

Histogram region_histogram(const GrayImage& image, const BinaryMask& mask) {
  if (image.empty() || !image.same_shape(mask)) {
    throw ImageError("region_histogram: image and mask dimensions differ");
  }
  std::array<std::size_t, kGrayLevels> counts{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (mask[i]) {
      ++counts[image[i]];
      ++n;
    }
  }
  if (n == 0) throw EmptyRegionError();
  Histogram hist;
  for (int i = 0; i < kGrayLevels; ++i) hist.p[i] = double(counts[i]) / double(n);
  return hist;
}

FeatureVector extract_features(const Histogram& hist) {
  FeatureVector f;
  for (int i = 0; i < kGrayLevels; ++i) f.mean += i * hist.p[i];

  double m3 = 0.0;
  double m4 = 0.0;
  for (int i = 0; i < kGrayLevels; ++i) {
    const double p = hist.p[i];
    if (p == 0.0) continue;
    const double d = i - f.mean;
    const double d2 = d * d;
    f.variance += d2 * p;
    m3 += d2 * d * p;
    m4 += d2 * d2 * p;
    f.energy += p * p;
    f.entropy -= p * std::log2(p);
  }
  if (f.variance > 0.0) {
    const double sigma = std::sqrt(f.variance);
    f.skewness = m3 / (f.variance * sigma);
    f.kurtosis = m4 / (f.variance * f.variance) - 3.0;
  }
  return f;
}

}  // namespace gesture
