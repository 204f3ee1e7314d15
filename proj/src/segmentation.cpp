#include "gesture/segmentation.hpp"

#include <algorithm>

namespace gesture {

RgbImage denoise_rgb(const RgbImage& image, const MdwmfConfig& config,
                     std::vector<std::size_t>* changed_per_iteration) {
  if (image.empty()) throw ImageError("denoise_rgb: empty image");
  RgbImage out = image;
  std::vector<std::size_t> changed(config.thresholds.size(), 0);
  for (int channel = 0; channel < 3; ++channel) {
    auto member = channel == 0 ? &Rgb::r : channel == 1 ? &Rgb::g : &Rgb::b;
    GrayImage plane(image.width(), image.height());
    for (std::size_t i = 0; i < image.size(); ++i) plane[i] = image[i].*member;
    const MdwmfResult filtered = mdwmf_detailed(plane, config);
    for (std::size_t i = 0; i < image.size(); ++i) out[i].*member = filtered.image[i];
    for (std::size_t k = 0; k < changed.size(); ++k) changed[k] += filtered.changed_per_iteration[k];
  }
  if (changed_per_iteration != nullptr) *changed_per_iteration = std::move(changed);
  return out;
}

SegmentationResult segment_pipeline(const RgbImage& image, const SegmentConfig& config) {
  config.canny.validate();
  if (image.empty()) throw ImageError("segment_pipeline: empty image");

  const RgbImage source = config.denoise ? denoise_rgb(image, *config.denoise) : image;
  const FloatPlane b_star = extract_b(rgb_to_lab(source));

  SegmentationResult result;
  result.threshold = otsu_threshold(b_star);
  const auto values = b_star.data();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  result.degenerate = *lo == *hi;

  BinaryMask binary = binarize(b_star, result.threshold);
  if (config.invert && !result.degenerate) binary = complement(binary);

  result.mask = dilate(erode(binary, erosion_element()), dilation_element());
  result.masked_gray = map_mask(rgb_to_gray(source), result.mask);
  result.edges = canny(result.masked_gray, config.canny);
  return result;
}

}  // namespace gesture
