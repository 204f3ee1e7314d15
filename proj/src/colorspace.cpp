#include "gesture/colorspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace gesture {

namespace {

constexpr double kEpsilon = 216.0 / 24389.0;  // (6/29)^3
constexpr double kKappa = 24389.0 / 27.0;     // (29/3)^3

// Inverse sRGB companding for every 8-bit code value.
const std::array<double, 256>& linear_table() {
  static const std::array<double, 256> table = [] {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) {
      const double c = i / 255.0;
      t[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    }
    return t;
  }();
  return table;
}

double lab_f(double t) noexcept {
  return t > kEpsilon ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

}  // namespace

Lab srgb_to_lab(Rgb pixel) noexcept {
  const auto& lin = linear_table();
  const double r = lin[pixel.r];
  const double g = lin[pixel.g];
  const double b = lin[pixel.b];

  const double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
  const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
  const double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;

  const double fx = lab_f(x / kWhiteX);
  const double fy = lab_f(y / kWhiteY);
  const double fz = lab_f(z / kWhiteZ);
  // The matrix's Y row sums to 1.0000001, which would put white a hair above 100.
  const double l = std::clamp(116.0 * fy - 16.0, 0.0, 100.0);
  return Lab{l, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

LabImage rgb_to_lab(const RgbImage& image) {
  if (image.empty()) throw ImageError("rgb_to_lab: empty image");
  LabImage lab{FloatPlane(image.width(), image.height()),
               FloatPlane(image.width(), image.height()),
               FloatPlane(image.width(), image.height())};
  for (std::size_t i = 0; i < image.size(); ++i) {
    const Lab p = srgb_to_lab(image[i]);
    lab.l[i] = p.l;
    lab.a[i] = p.a;
    lab.b[i] = p.b;
  }
  return lab;
}

FloatPlane extract_b(const LabImage& lab) { return lab.b; }

}  // namespace gesture
