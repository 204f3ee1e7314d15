#include "gesture/denoise.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "gesture/random.hpp"

namespace gesture {

namespace {

constexpr int kRadius = 2;
constexpr int kWindow = 2 * kRadius + 1;

// Primitive directions of the 5x5 window, each with its in-window multiples.
const std::array<std::vector<Offset>, 8> kCollinear = {{
    {{1, 0}, {2, 0}},
    {{0, 1}, {0, 2}},
    {{1, 1}, {2, 2}},
    {{1, -1}, {2, -2}},
    {{1, 2}},
    {{2, 1}},
    {{1, -2}},
    {{2, -1}},
}};

}  // namespace

std::vector<Offset> DirectionLine::offsets() const {
  std::vector<Offset> out;
  out.reserve(pairs.size() * 2);
  for (const Offset& o : pairs) {
    out.push_back(o);
    out.push_back(Offset{-o.dx, -o.dy});
  }
  return out;
}

DirectionSet default_directions() {
  DirectionSet dirs;
  for (const auto& line : kCollinear) {
    for (const Offset& o : line) dirs.push_back(DirectionLine{{o}});
  }
  return dirs;
}

DirectionSet collinear_directions() {
  DirectionSet dirs;
  for (const auto& line : kCollinear) dirs.push_back(DirectionLine{line});
  return dirs;
}

void validate_directions(const DirectionSet& dirs) {
  if (dirs.empty()) throw std::invalid_argument("direction set is empty");
  std::set<Offset> seen;
  for (const DirectionLine& line : dirs) {
    if (line.pairs.empty()) throw std::invalid_argument("direction line has no offsets");
    for (const Offset& o : line.offsets()) {
      if (std::abs(o.dx) > kRadius || std::abs(o.dy) > kRadius || (o.dx == 0 && o.dy == 0)) {
        throw std::invalid_argument("direction offset (" + std::to_string(o.dx) + ", " +
                                    std::to_string(o.dy) + ") outside the 5x5 window");
      }
      if (!seen.insert(o).second) {
        throw std::invalid_argument("direction offset (" + std::to_string(o.dx) + ", " +
                                    std::to_string(o.dy) + ") appears twice");
      }
    }
  }
}

void MdwmfConfig::validate() const {
  if (thresholds.empty()) throw std::invalid_argument("mdwmf needs at least one threshold");
  for (int t : thresholds) {
    if (t <= 0) throw std::invalid_argument("mdwmf thresholds must be positive");
  }
  if (weight < 1) throw std::invalid_argument("mdwmf weight must be a positive integer");
  validate_directions(directions);
}

RvinResult inject_rvin_tracked(const GrayImage& image, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("noise density must lie in [0, 1]");
  }
  if (image.empty()) throw ImageError("inject_rvin: empty image");
  RvinResult result{image, BinaryMask(image.width(), image.height()), 0};
  Engine rng(seed);
  for (std::size_t i = 0; i < image.size(); ++i) {
    // Both draws happen for every pixel so the corruption pattern at one density
    // is a subset of the pattern at any higher density under the same seed.
    const double u = uniform01(rng);
    const auto value = static_cast<std::uint8_t>(rng() >> 56);
    if (u < density) {
      result.image[i] = value;
      result.corrupted[i] = 1;
      ++result.corrupted_count;
    }
  }
  return result;
}

std::vector<int> directional_differences(const GrayImage& image, std::size_t x, std::size_t y,
                                         const DirectionSet& dirs) {
  if (x >= image.width() || y >= image.height()) {
    throw std::out_of_range("directional_differences: pixel outside image");
  }
  const auto cx = static_cast<std::ptrdiff_t>(x);
  const auto cy = static_cast<std::ptrdiff_t>(y);
  const int center2 = 2 * int(image.at(x, y));
  std::vector<int> diffs;
  diffs.reserve(dirs.size());
  for (const DirectionLine& line : dirs) {
    int sum = 0;
    for (const Offset& o : line.pairs) {
      const int a = image.clamped(cx + o.dx, cy + o.dy);
      const int b = image.clamped(cx - o.dx, cy - o.dy);
      sum += std::abs(a + b - center2);
    }
    diffs.push_back(sum);
  }
  return diffs;
}

bool is_noisy(std::span<const int> diffs, int threshold) {
  if (diffs.empty()) throw std::invalid_argument("is_noisy: no directional differences");
  return *std::min_element(diffs.begin(), diffs.end()) > threshold;
}

std::uint8_t weighted_median(std::span<const std::uint8_t> values, std::span<const int> weights) {
  if (values.empty() || values.size() != weights.size()) {
    throw std::invalid_argument("weighted_median: values and weights must be equal, nonzero length");
  }
  // Tally per intensity; walking the tally is a sort by value.
  std::array<long, 256> tally{};
  long total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i] <= 0) throw std::invalid_argument("weighted_median: weights must be positive");
    tally[values[i]] += weights[i];
    total += weights[i];
  }
  long cumulative = 0;
  for (int v = 0; v < 256; ++v) {
    cumulative += tally[v];
    // cumulative >= total / 2, kept in integers
    if (tally[v] > 0 && 2 * cumulative >= total) return static_cast<std::uint8_t>(v);
  }
  return 255;  // unreachable: cumulative reaches total
}

MdwmfResult mdwmf_detailed(const GrayImage& image, const MdwmfConfig& config) {
  config.validate();
  if (image.empty()) throw ImageError("mdwmf: empty image");

  // Weight mask of the 5x5 window for each line: `weight` on the line and centre.
  std::vector<std::array<int, kWindow * kWindow>> line_weights;
  for (const DirectionLine& line : config.directions) {
    std::array<int, kWindow * kWindow> w;
    w.fill(1);
    w[kRadius * kWindow + kRadius] = config.weight;
    for (const Offset& o : line.offsets()) {
      w[(o.dy + kRadius) * kWindow + (o.dx + kRadius)] = config.weight;
    }
    line_weights.push_back(w);
  }

  MdwmfResult result{image, {}};
  std::array<std::uint8_t, kWindow * kWindow> window{};
  for (int threshold : config.thresholds) {
    const GrayImage snapshot = result.image;
    std::size_t changed = 0;
    for (std::size_t y = 0; y < snapshot.height(); ++y) {
      for (std::size_t x = 0; x < snapshot.width(); ++x) {
        const auto diffs = directional_differences(snapshot, x, y, config.directions);
        if (!is_noisy(diffs, threshold)) continue;
        const auto best = static_cast<std::size_t>(
            std::min_element(diffs.begin(), diffs.end()) - diffs.begin());
        for (int dy = -kRadius; dy <= kRadius; ++dy) {
          for (int dx = -kRadius; dx <= kRadius; ++dx) {
            window[(dy + kRadius) * kWindow + (dx + kRadius)] = snapshot.clamped(
                static_cast<std::ptrdiff_t>(x) + dx, static_cast<std::ptrdiff_t>(y) + dy);
          }
        }
        const std::uint8_t repaired = weighted_median(window, line_weights[best]);
        if (repaired != snapshot.at(x, y)) {
          result.image.at(x, y) = repaired;
          ++changed;
        }
      }
    }
    result.changed_per_iteration.push_back(changed);
  }
  return result;
}

}  // namespace gesture
