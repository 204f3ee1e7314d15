#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "gesture/pnm.hpp"

namespace gesture::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("gesture_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ignored;
  fs::remove_all(path_, ignored);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_bytes(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

double normal(Engine& rng) {
  // Box-Muller on the portable uniform source.
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

GrayImage random_gray(std::size_t w, std::size_t h, Engine& rng) {
  GrayImage img(w, h);
  for (auto& v : img.data()) v = static_cast<std::uint8_t>(rng() >> 56);
  return img;
}

BinaryMask random_mask(std::size_t w, std::size_t h, double density, Engine& rng) {
  BinaryMask m(w, h);
  for (auto& v : m.data()) v = uniform01(rng) < density ? 1 : 0;
  return m;
}

GrayImage restoration_test_image() {
  constexpr std::size_t n = 256;
  GrayImage img(n, n, 60);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      double v = 60.0;
      if (x >= 180) v = 25.0;
      if (x >= 20 && x < 110 && y >= 20 && y < 120) v = 170.0;
      if (x >= 40 && x < 140 && y >= 150 && y < 236) v = 120.0;
      const double dx = double(x) - 145.0;
      const double dy = double(y) - 70.0;
      v += 150.0 * std::exp(-(dx * dx + dy * dy) / (2.0 * 12.0 * 12.0));
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return img;
}

namespace {

struct Rect {
  std::size_t x0, y0, x1, y1;  // half-open
};

void fill(BinaryMask& m, const Rect& r) {
  for (std::size_t y = r.y0; y < r.y1; ++y) {
    for (std::size_t x = r.x0; x < r.x1; ++x) m.at(x, y) = 1;
  }
}

std::uint8_t texture(std::size_t x, std::size_t y, Engine& rng) {
  const double v = 120.0 + 30.0 * std::sin(x * 0.21) * std::cos(y * 0.17) +
                   10.0 * (uniform01(rng) - 0.5);
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

}  // namespace

BinaryMask hand_truth(std::size_t w, std::size_t h) {
  BinaryMask m(w, h);
  const double sx = double(w) / 256.0;
  const double sy = double(h) / 256.0;
  auto scaled = [&](Rect r) {
    return Rect{std::size_t(r.x0 * sx), std::size_t(r.y0 * sy), std::size_t(r.x1 * sx),
                std::size_t(r.y1 * sy)};
  };
  fill(m, scaled({80, 120, 178, 210}));   // palm
  fill(m, scaled({82, 44, 96, 120}));     // fingers
  fill(m, scaled({106, 30, 120, 120}));
  fill(m, scaled({130, 36, 144, 120}));
  fill(m, scaled({154, 54, 168, 120}));
  fill(m, scaled({44, 140, 80, 156}));    // thumb
  fill(m, scaled({100, 210, 160, 240}));  // wrist
  return m;
}

RgbImage hand_image(const BinaryMask& truth, std::uint64_t seed) {
  Engine rng(seed);
  RgbImage img(truth.width(), truth.height());
  for (std::size_t y = 0; y < truth.height(); ++y) {
    for (std::size_t x = 0; x < truth.width(); ++x) {
      if (truth.at(x, y)) {
        const auto jitter = static_cast<std::uint8_t>(rng() >> 60);  // 0..15
        img.at(x, y) = Rgb{static_cast<std::uint8_t>(240 + jitter),
                           static_cast<std::uint8_t>(200 + jitter), 10};
      } else {
        const std::uint8_t g = texture(x, y, rng);
        img.at(x, y) = Rgb{g, g, g};
      }
    }
  }
  return img;
}

RgbImage class_hand_image(std::size_t class_index, std::uint64_t seed, std::size_t size) {
  static constexpr std::array<double, 5> kBrightness = {0.55, 0.65, 0.75, 0.85, 0.95};
  static constexpr std::array<double, 5> kTexture = {4.0, 20.0, 8.0, 28.0, 12.0};
  Engine rng(seed * 7919 + class_index);
  const double scale = kBrightness[class_index % kBrightness.size()];
  const double amp = kTexture[class_index % kTexture.size()];
  const BinaryMask truth = hand_truth(size, size);
  const auto shift = static_cast<std::ptrdiff_t>(uniform_below(rng, 5)) - 2;

  RgbImage img(size, size);
  for (std::size_t y = 0; y < size; ++y) {
    for (std::size_t x = 0; x < size; ++x) {
      const auto sx = static_cast<std::ptrdiff_t>(x) - shift;
      const bool hand = truth.contains(sx, static_cast<std::ptrdiff_t>(y)) &&
                        truth.at(std::size_t(sx), y);
      if (hand) {
        const double t = amp * (uniform01(rng) - 0.5);
        const auto r = static_cast<std::uint8_t>(std::clamp(std::lround(255 * scale + t), 0L, 255L));
        const auto g = static_cast<std::uint8_t>(std::clamp(std::lround(230 * scale + t), 0L, 255L));
        img.at(x, y) = Rgb{r, g, 0};
      } else {
        const std::uint8_t g = texture(x, y, rng);
        img.at(x, y) = Rgb{g, g, g};
      }
    }
  }
  return img;
}

GrayImage disk_image(std::size_t size, double cx, double cy, double radius, std::uint8_t inside,
                     std::uint8_t outside) {
  GrayImage img(size, size, outside);
  for (std::size_t y = 0; y < size; ++y) {
    for (std::size_t x = 0; x < size; ++x) {
      const double dx = double(x) - cx;
      const double dy = double(y) - cy;
      if (dx * dx + dy * dy <= radius * radius) img.at(x, y) = inside;
    }
  }
  return img;
}

double iou(const BinaryMask& a, const BinaryMask& b) {
  std::size_t inter = 0;
  std::size_t uni = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    inter += (a[i] && b[i]) ? 1 : 0;
    uni += (a[i] || b[i]) ? 1 : 0;
  }
  return uni == 0 ? 1.0 : double(inter) / double(uni);
}

namespace {

std::size_t count_components(const BinaryMask& mask, bool foreground, bool eight) {
  const auto w = static_cast<std::ptrdiff_t>(mask.width());
  const auto h = static_cast<std::ptrdiff_t>(mask.height());
  std::vector<std::uint8_t> seen(mask.size(), 0);
  std::size_t count = 0;
  std::vector<std::ptrdiff_t> stack;
  for (std::ptrdiff_t start = 0; start < w * h; ++start) {
    if (seen[start] || (mask[start] != 0) != foreground) continue;
    ++count;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      const auto x = i % w;
      const auto y = i / w;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if ((dx == 0 && dy == 0) || (!eight && dx != 0 && dy != 0)) continue;
          const auto nx = x + dx;
          const auto ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const auto j = ny * w + nx;
          if (!seen[j] && (mask[j] != 0) == foreground) {
            seen[j] = 1;
            stack.push_back(j);
          }
        }
      }
    }
  }
  return count;
}

}  // namespace

std::size_t components8(const BinaryMask& mask) { return count_components(mask, true, true); }

std::size_t background_components4(const BinaryMask& mask) {
  return count_components(mask, false, false);
}

std::vector<double> distances_to_outline(const BinaryMask& edges, const BinaryMask& truth) {
  // Outline cracks: unit segments between a truth pixel and a 4-neighbour outside it.
  struct Segment {
    double x0, y0, x1, y1;
  };
  std::vector<Segment> cracks;
  const auto w = static_cast<std::ptrdiff_t>(truth.width());
  const auto h = static_cast<std::ptrdiff_t>(truth.height());
  auto inside = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
    return x >= 0 && y >= 0 && x < w && y < h && truth.at(std::size_t(x), std::size_t(y));
  };
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      if (!inside(x, y)) continue;
      const double cx = double(x);
      const double cy = double(y);
      if (!inside(x - 1, y)) cracks.push_back({cx - 0.5, cy - 0.5, cx - 0.5, cy + 0.5});
      if (!inside(x + 1, y)) cracks.push_back({cx + 0.5, cy - 0.5, cx + 0.5, cy + 0.5});
      if (!inside(x, y - 1)) cracks.push_back({cx - 0.5, cy - 0.5, cx + 0.5, cy - 0.5});
      if (!inside(x, y + 1)) cracks.push_back({cx - 0.5, cy + 0.5, cx + 0.5, cy + 0.5});
    }
  }
  std::vector<double> out;
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      if (!edges.at(std::size_t(x), std::size_t(y))) continue;
      double best = 1e300;
      for (const Segment& s : cracks) {
        // Axis-aligned unit segment: clamp the point onto it.
        const double px = std::clamp(double(x), std::min(s.x0, s.x1), std::max(s.x0, s.x1));
        const double py = std::clamp(double(y), std::min(s.y0, s.y1), std::max(s.y0, s.y1));
        best = std::min(best, std::hypot(double(x) - px, double(y) - py));
      }
      out.push_back(best);
    }
  }
  return out;
}

Dataset gaussian_clusters(std::size_t classes, std::size_t per_class, double separation,
                          std::uint64_t seed) {
  static constexpr std::array<double, 6> kBase = {120.0, 800.0, 0.0, 0.0, 0.05, 5.0};
  static constexpr std::array<double, 6> kScale = {12.0, 90.0, 0.15, 0.3, 0.004, 0.2};
  Engine rng(seed);
  Dataset data;
  const double offset = separation / std::numbers::sqrt2;
  for (std::size_t c = 0; c < classes; ++c) data.class_names.push_back("class" + std::to_string(c));
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t i = 0; i < per_class; ++i) {
      std::array<double, 6> f{};
      for (std::size_t k = 0; k < 6; ++k) {
        const double mean = (k == c % 6) ? offset : 0.0;
        f[k] = kBase[k] + kScale[k] * (mean + normal(rng));
      }
      char path[64];
      std::snprintf(path, sizeof path, "c%02zu/%04zu", c, i);
      data.samples.push_back({FeatureVector::from_array(f), c, path});
    }
  }
  return data;
}

void write_hand_dataset(const fs::path& root, std::size_t classes, std::size_t per_class,
                        std::size_t size) {
  static const std::array<const char*, 5> kNames = {"drinking", "hi", "pointing", "self", "takecare"};
  for (std::size_t c = 0; c < classes; ++c) {
    const fs::path dir = root / kNames[c % kNames.size()];
    fs::create_directories(dir);
    for (std::size_t i = 0; i < per_class; ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "img_%02zu.ppm", i);
      save_pnm(class_hand_image(c, i + 1, size), dir / name);
    }
  }
}

}  // namespace gesture::testing
