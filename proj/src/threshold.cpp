#include "gesture/threshold.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gesture {

namespace {

double boundary(double lo, double hi, int k) { return lo + (hi - lo) * (k + 1) / kOtsuBins; }

int bin_of(double v, double lo, double hi) {
  int j = static_cast<int>(std::ceil((v - lo) / (hi - lo) * kOtsuBins)) - 1;
  j = std::clamp(j, 0, kOtsuBins - 1);
  // Settle rounding so the bin agrees with the boundaries exactly.
  while (j > 0 && v <= boundary(lo, hi, j - 1)) --j;
  while (j < kOtsuBins - 1 && v > boundary(lo, hi, j)) ++j;
  return j;
}

}  // namespace

double otsu_threshold(const FloatPlane& plane) {
  if (plane.empty()) throw ImageError("otsu_threshold: empty plane");
  const auto values = plane.data();
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("otsu_threshold: non-finite value");
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (lo == hi) return lo;

  std::array<std::int64_t, kOtsuBins> counts{};
  for (double v : values) ++counts[bin_of(v, lo, hi)];

  const std::int64_t total = static_cast<std::int64_t>(values.size());
  std::int64_t total_sum = 0;
  for (int j = 0; j < kOtsuBins; ++j) total_sum += j * counts[j];

  // sigma_B^2 is proportional to (n1 S0 - n0 S1)^2 / (n0 n1) with bin indices as
  // levels; the integer numerator makes equal partitions score identically.
  double best_score = 0.0;
  int best_k = -1;
  std::int64_t n0 = 0;
  std::int64_t s0 = 0;
  for (int k = 0; k < kOtsuBins - 1; ++k) {
    n0 += counts[k];
    s0 += k * counts[k];
    const std::int64_t n1 = total - n0;
    const std::int64_t s1 = total_sum - s0;
    if (n0 == 0 || n1 == 0) continue;
    const double d = static_cast<double>(n1 * s0 - n0 * s1);
    const double score = d * d / (static_cast<double>(n0) * static_cast<double>(n1));
    if (score > best_score) {
      best_score = score;
      best_k = k;
    }
  }
  return best_k < 0 ? lo : boundary(lo, hi, best_k);
}

BinaryMask binarize(const FloatPlane& plane, double threshold) {
  if (plane.empty()) throw ImageError("binarize: empty plane");
  if (!std::isfinite(threshold)) throw std::invalid_argument("binarize: non-finite threshold");
  BinaryMask mask(plane.width(), plane.height());
  for (std::size_t i = 0; i < plane.size(); ++i) mask[i] = plane[i] > threshold ? 1 : 0;
  return mask;
}

GrayImage map_mask(const GrayImage& original, const BinaryMask& mask) {
  if (original.empty() || !original.same_shape(mask)) {
    throw ImageError("map_mask: image and mask dimensions differ");
  }
  GrayImage out(original.width(), original.height());
  for (std::size_t i = 0; i < original.size(); ++i) out[i] = mask[i] ? original[i] : 0;
  return out;
}

}  // namespace gesture
