#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gesture/image.hpp"

namespace gesture {

/// Pixel offset inside the 5x5 detection window: `dx` columns, `dy` rows.
struct Offset {
  int dx = 0;
  int dy = 0;

  friend bool operator==(const Offset&, const Offset&) = default;
  friend auto operator<=>(const Offset&, const Offset&) = default;
};

/**
 * One detection direction: a set of antipodal offset pairs through the window
 * centre. Each stored offset `o` stands for the pair {o, -o}.
 */
struct DirectionLine {
  std::vector<Offset> pairs;

  /// Every offset on the line, both halves of each pair.
  std::vector<Offset> offsets() const;
};

using DirectionSet = std::vector<DirectionLine>;

/// The 12 antipodal pairs of the 5x5 window, one pair per line.
DirectionSet default_directions();

/// The 8 collinear lines of the 5x5 window (pairs along the same slope grouped).
DirectionSet collinear_directions();

/// Throws std::invalid_argument unless every offset lies in the 5x5 window,
/// is not the centre, and no offset appears on two lines.
void validate_directions(const DirectionSet& dirs);

struct MdwmfConfig {
  std::vector<int> thresholds{33, 23, 16};
  int weight = 2;
  DirectionSet directions = default_directions();

  /// Throws std::invalid_argument on empty/non-positive thresholds, weight < 1 or
  /// an invalid direction set.
  void validate() const;
};

struct RvinResult {
  GrayImage image;
  /// Foreground where a pixel was selected for replacement (even if it redrew
  /// its original value).
  BinaryMask corrupted;
  std::size_t corrupted_count = 0;
};

/// Random-value impulse noise: each pixel is independently replaced, with
/// probability `density`, by a uniform draw from [0, 255].
RvinResult inject_rvin_tracked(const GrayImage& image, double density, std::uint64_t seed);

inline GrayImage inject_rvin(const GrayImage& image, double density, std::uint64_t seed) {
  return inject_rvin_tracked(image, density, seed).image;
}

/// Per line: sum over its pairs of |I(p+o) + I(p-o) - 2 I(p)|, replicate border.
std::vector<int> directional_differences(const GrayImage& image, std::size_t x, std::size_t y,
                                         const DirectionSet& dirs);

/// A pixel is noisy when even its smoothest direction exceeds the threshold.
bool is_noisy(std::span<const int> diffs, int threshold);

/// Lower weighted median: smallest value whose cumulative weight reaches half the total.
std::uint8_t weighted_median(std::span<const std::uint8_t> values, std::span<const int> weights);

struct MdwmfResult {
  GrayImage image;
  /// Pixels whose value changed in each pass.
  std::vector<std::size_t> changed_per_iteration;
};

/// Modified directional weighted median filter: one detect/replace pass per threshold.
/// Each pass detects on a snapshot of its input, so results do not depend on scan order.
MdwmfResult mdwmf_detailed(const GrayImage& image, const MdwmfConfig& config = {});

inline GrayImage mdwmf(const GrayImage& image, const MdwmfConfig& config = {}) {
  return mdwmf_detailed(image, config).image;
}

}  // namespace gesture
