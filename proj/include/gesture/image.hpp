#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gesture {

/// Thrown when a raster is constructed or combined in violation of its shape invariants.
class ImageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/**
 * Dense row-major raster of `T` samples.
 *
 * A default-constructed raster is empty (0x0) and only exists so that raster
 * types stay regular; every operation that consumes pixels rejects it. Any
 * non-empty raster has width >= 1, height >= 1 and exactly width * height
 * samples. `Tag` keeps rasters that share a sample type (gray images and
 * binary masks) from being mixed up.
 */
template <typename T, typename Tag>
class Raster {
 public:
  using value_type = T;

  Raster() = default;

  Raster(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(width * height, fill);
  }

  Raster(std::size_t width, std::size_t height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != width * height) {
      throw ImageError("raster data length " + std::to_string(data_.size()) +
                       " does not match " + std::to_string(width) + "x" +
                       std::to_string(height));
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  const T& at(std::size_t x, std::size_t y) const { return data_[index(x, y)]; }
  T& at(std::size_t x, std::size_t y) { return data_[index(x, y)]; }

  const T& operator[](std::size_t i) const noexcept { return data_[i]; }
  T& operator[](std::size_t i) noexcept { return data_[i]; }

  /// Sample at (x, y) with coordinates clamped into the raster (replicate border).
  const T& clamped(std::ptrdiff_t x, std::ptrdiff_t y) const noexcept {
    const auto cx = clamp_coord(x, width_);
    const auto cy = clamp_coord(y, height_);
    return data_[cy * width_ + cx];
  }

  bool contains(std::ptrdiff_t x, std::ptrdiff_t y) const noexcept {
    return x >= 0 && y >= 0 && static_cast<std::size_t>(x) < width_ &&
           static_cast<std::size_t>(y) < height_;
  }

  bool same_shape(std::size_t w, std::size_t h) const noexcept {
    return width_ == w && height_ == h;
  }

  template <typename U, typename OtherTag>
  bool same_shape(const Raster<U, OtherTag>& other) const noexcept {
    return same_shape(other.width(), other.height());
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  static void check_dims(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) {
      throw ImageError("raster dimensions must be positive, got " + std::to_string(width) +
                       "x" + std::to_string(height));
    }
  }

  static std::size_t clamp_coord(std::ptrdiff_t v, std::size_t extent) noexcept {
    if (v < 0) return 0;
    if (static_cast<std::size_t>(v) >= extent) return extent - 1;
    return static_cast<std::size_t>(v);
  }

  std::size_t index(std::size_t x, std::size_t y) const {
    if (x >= width_ || y >= height_) {
      throw std::out_of_range("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") outside " + std::to_string(width_) + "x" +
                              std::to_string(height_) + " raster");
    }
    return y * width_ + x;
  }

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> data_;
};

struct GrayTag {};
struct RgbTag {};
struct FloatTag {};
struct MaskTag {};

/// 8-bit intensities.
using GrayImage = Raster<std::uint8_t, GrayTag>;
/// 8-bit (R, G, B) triples, sRGB assumed.
using RgbImage = Raster<Rgb, RgbTag>;
/// Double-precision scalar field, e.g. a single CIELAB channel.
using FloatPlane = Raster<double, FloatTag>;
/// Foreground/background raster; samples are 0 (background) or 1 (foreground).
using BinaryMask = Raster<std::uint8_t, MaskTag>;

/// Sentinel PSNR for identical images (zero mean squared error).
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

/// ITU-R BT.601 luma, rounded to nearest.
GrayImage rgb_to_gray(const RgbImage& image);

/// Replicates a gray image into three equal channels.
RgbImage gray_to_rgb(const GrayImage& image);

/// 10 log10(255^2 / MSE); kInfinitePsnr when the images are identical.
double psnr(const GrayImage& reference, const GrayImage& test);

std::size_t count_foreground(const BinaryMask& mask) noexcept;

BinaryMask complement(const BinaryMask& mask);

}  // namespace gesture
