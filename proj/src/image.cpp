#include "gesture/image.hpp"

#include <algorithm>
#include <cmath>

namespace gesture {

namespace {

void require_nonempty(bool empty, const char* what) {
  if (empty) throw ImageError(std::string(what) + ": empty image");
}

}  // namespace

GrayImage rgb_to_gray(const RgbImage& image) {
  require_nonempty(image.empty(), "rgb_to_gray");
  GrayImage out(image.width(), image.height());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const Rgb& p = image[i];
    const double luma = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
    out[i] = static_cast<std::uint8_t>(std::clamp(std::lround(luma), 0L, 255L));
  }
  return out;
}

RgbImage gray_to_rgb(const GrayImage& image) {
  require_nonempty(image.empty(), "gray_to_rgb");
  RgbImage out(image.width(), image.height());
  for (std::size_t i = 0; i < image.size(); ++i) {
    out[i] = Rgb{image[i], image[i], image[i]};
  }
  return out;
}

double psnr(const GrayImage& reference, const GrayImage& test) {
  require_nonempty(reference.empty() || test.empty(), "psnr");
  if (!reference.same_shape(test)) {
    throw ImageError("psnr: dimension mismatch");
  }
  // Integer accumulation keeps the metric exactly symmetric.
  std::uint64_t sse = 0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const int d = int(reference[i]) - int(test[i]);
    sse += static_cast<std::uint64_t>(d * d);
  }
  if (sse == 0) return kInfinitePsnr;
  const double mse = double(sse) / double(reference.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::size_t count_foreground(const BinaryMask& mask) noexcept {
  const auto d = mask.data();
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](auto v) { return v != 0; }));
}

BinaryMask complement(const BinaryMask& mask) {
  require_nonempty(mask.empty(), "complement");
  BinaryMask out(mask.width(), mask.height());
  for (std::size_t i = 0; i < mask.size(); ++i) out[i] = mask[i] ? 0 : 1;
  return out;
}

}  // namespace gesture
