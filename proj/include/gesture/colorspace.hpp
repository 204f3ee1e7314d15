#pragma once

#include "gesture/image.hpp"

namespace gesture {

/// CIELAB planes of an image. L* in [0, 100]; a*, b* unbounded.
struct LabImage {
  FloatPlane l;
  FloatPlane a;
  FloatPlane b;

  std::size_t width() const noexcept { return l.width(); }
  std::size_t height() const noexcept { return l.height(); }
};

struct Lab {
  double l = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// D65 reference white in XYZ, Y normalised to 1.
inline constexpr double kWhiteX = 0.95047;
inline constexpr double kWhiteY = 1.00000;
inline constexpr double kWhiteZ = 1.08883;

/// sRGB (8-bit, D65) to CIELAB.
Lab srgb_to_lab(Rgb pixel) noexcept;

LabImage rgb_to_lab(const RgbImage& image);

/// The b* (blue-yellow) plane.
FloatPlane extract_b(const LabImage& lab);

}  // namespace gesture
