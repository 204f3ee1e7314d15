#pragma once

#include "gesture/image.hpp"

namespace gesture {

inline constexpr int kOtsuBins = 256;

/**
 * Otsu's automatic global threshold.
 *
 * The plane's [min, max] range is split into 256 equal bins; bin k holds values in
 * (min + k w, min + (k+1) w] with w = (max - min) / 256 (bin 0 also holds min). The
 * candidate thresholds are the 255 inner boundaries min + (k+1) w, and the one with
 * the largest between-class variance wins, smallest on ties. Because bins are
 * closed on the right, `binarize(plane, t)` splits pixels exactly as the winning
 * histogram partition does. A constant plane returns its value.
 */
double otsu_threshold(const FloatPlane& plane);

/// Foreground where value > threshold (strict).
BinaryMask binarize(const FloatPlane& plane, double threshold);

/// Keeps `original` where the mask is foreground, zero elsewhere.
GrayImage map_mask(const GrayImage& original, const BinaryMask& mask);

}  // namespace gesture
