#include "gesture/canny.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gesture {

namespace {

FloatPlane gaussian_blur(const GrayImage& image, double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    sum += kernel[i + radius];
  }
  for (double& k : kernel) k /= sum;

  const auto w = static_cast<std::ptrdiff_t>(image.width());
  const auto h = static_cast<std::ptrdiff_t>(image.height());
  FloatPlane horizontal(image.width(), image.height());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += kernel[i + radius] * image.clamped(x + i, y);
      horizontal.at(std::size_t(x), std::size_t(y)) = acc;
    }
  }
  FloatPlane out(image.width(), image.height());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += kernel[i + radius] * horizontal.clamped(x, y + i);
      out.at(std::size_t(x), std::size_t(y)) = acc;
    }
  }
  return out;
}

struct Gradients {
  FloatPlane gx;
  FloatPlane gy;
  FloatPlane magnitude;
};

Gradients sobel(const FloatPlane& s) {
  Gradients g{FloatPlane(s.width(), s.height()), FloatPlane(s.width(), s.height()),
              FloatPlane(s.width(), s.height())};
  const auto w = static_cast<std::ptrdiff_t>(s.width());
  const auto h = static_cast<std::ptrdiff_t>(s.height());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      const double gx = (s.clamped(x + 1, y - 1) + 2.0 * s.clamped(x + 1, y) + s.clamped(x + 1, y + 1)) -
                        (s.clamped(x - 1, y - 1) + 2.0 * s.clamped(x - 1, y) + s.clamped(x - 1, y + 1));
      const double gy = (s.clamped(x - 1, y + 1) + 2.0 * s.clamped(x, y + 1) + s.clamped(x + 1, y + 1)) -
                        (s.clamped(x - 1, y - 1) + 2.0 * s.clamped(x, y - 1) + s.clamped(x + 1, y - 1));
      const auto i = static_cast<std::size_t>(y * w + x);
      g.gx[i] = gx;
      g.gy[i] = gy;
      g.magnitude[i] = std::hypot(gx, gy);
    }
  }
  return g;
}

// Neighbour step across the edge for the quantised gradient direction, pointing to
// the later neighbour in raster order.
struct Step {
  int dx;
  int dy;
};

Step quantise(double gx, double gy) {
  double angle = std::atan2(gy, gx) * 180.0 / std::numbers::pi;
  if (angle < 0) angle += 180.0;
  if (angle < 22.5 || angle >= 157.5) return {1, 0};
  if (angle < 67.5) return {1, 1};
  if (angle < 112.5) return {0, 1};
  return {-1, 1};
}

}  // namespace

void CannyParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("canny sigma must be > 0");
  if (!(low > 0.0 && low < high && high <= 1.0)) {
    throw std::invalid_argument("canny thresholds must satisfy 0 < low < high <= 1");
  }
}

FloatPlane gradient_magnitude(const GrayImage& image, double sigma) {
  if (image.empty()) throw ImageError("gradient_magnitude: empty image");
  return sobel(gaussian_blur(image, sigma)).magnitude;
}

BinaryMask canny(const GrayImage& image, const CannyParams& params) {
  params.validate();
  if (image.empty()) throw ImageError("canny: empty image");
  const Gradients g = sobel(gaussian_blur(image, params.sigma));
  const auto mags = g.magnitude.data();
  const double max_mag = *std::max_element(mags.begin(), mags.end());

  BinaryMask edges(image.width(), image.height());
  if (max_mag <= 0.0) return edges;

  const double tie = 1e-9 * max_mag;
  const double low = params.low * max_mag;
  const double high = params.high * max_mag;
  const auto w = static_cast<std::ptrdiff_t>(image.width());
  const auto h = static_cast<std::ptrdiff_t>(image.height());
  auto mag_at = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
    return g.magnitude.contains(x, y) ? g.magnitude[std::size_t(y * w + x)] : 0.0;
  };

  // 0 = suppressed, 1 = weak, 2 = strong
  std::vector<std::uint8_t> state(image.size(), 0);
  std::vector<std::size_t> stack;
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      const auto i = std::size_t(y * w + x);
      const double m = g.magnitude[i];
      if (m < low) continue;
      const Step s = quantise(g.gx[i], g.gy[i]);
      const double earlier = mag_at(x - s.dx, y - s.dy);
      const double later = mag_at(x + s.dx, y + s.dy);
      if (!(m > earlier + tie && m >= later - tie)) continue;
      state[i] = m >= high ? 2 : 1;
      if (state[i] == 2) stack.push_back(i);
    }
  }

  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (edges[i]) continue;
    edges[i] = 1;
    const auto x = static_cast<std::ptrdiff_t>(i) % w;
    const auto y = static_cast<std::ptrdiff_t>(i) / w;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (!edges.contains(x + dx, y + dy)) continue;
        const auto j = std::size_t((y + dy) * w + x + dx);
        if (state[j] != 0 && !edges[j]) stack.push_back(j);
      }
    }
  }
  return edges;
}

}  // namespace gesture
