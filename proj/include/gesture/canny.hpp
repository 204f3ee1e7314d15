#pragma once

#include "gesture/image.hpp"

namespace gesture {

struct CannyParams {
  double sigma = 1.4;
  /// Hysteresis thresholds as fractions of the largest gradient magnitude.
  double low = 0.10;
  double high = 0.30;

  /// Throws std::invalid_argument unless sigma > 0 and 0 < low < high <= 1.
  void validate() const;
};

/// Gaussian-smoothed Sobel gradient magnitude, the quantity the detector thresholds.
FloatPlane gradient_magnitude(const GrayImage& image, double sigma);

/**
 * Canny edge detector: Gaussian smoothing (radius ceil(3 sigma)), Sobel
 * gradients, non-maximum suppression along 4 quantised directions and
 * 8-connected double-threshold hysteresis. Where two neighbours across an edge
 * tie in magnitude the earlier one in raster order is kept, so ideal step
 * edges come out one pixel wide.
 */
BinaryMask canny(const GrayImage& image, const CannyParams& params = {});

}  // namespace gesture
