#pragma once

#include <optional>

#include "gesture/canny.hpp"
#include "gesture/colorspace.hpp"
#include "gesture/denoise.hpp"
#include "gesture/image.hpp"
#include "gesture/morphology.hpp"
#include "gesture/threshold.hpp"

namespace gesture {

struct SegmentConfig {
  CannyParams canny;
  /// Take the low-b* side of the threshold as foreground.
  bool invert = false;
  /// When set, each RGB channel is filtered with MDWMF before colour conversion.
  std::optional<MdwmfConfig> denoise;
};

struct SegmentationResult {
  BinaryMask mask;        // after erosion + dilation
  GrayImage masked_gray;  // luma kept inside the mask, zero outside
  BinaryMask edges;       // Canny on masked_gray
  double threshold = 0.0; // Otsu threshold on b*
  /// b* was constant, so no split exists and the mask is empty.
  bool degenerate = false;
};

/// Runs MDWMF independently on the R, G and B channels.
RgbImage denoise_rgb(const RgbImage& image, const MdwmfConfig& config,
                     std::vector<std::size_t>* changed_per_iteration = nullptr);

/// rgb_to_lab -> b* -> Otsu -> binarize -> erode -> dilate -> map onto luma -> Canny.
SegmentationResult segment_pipeline(const RgbImage& image, const SegmentConfig& config = {});

}  // namespace gesture
