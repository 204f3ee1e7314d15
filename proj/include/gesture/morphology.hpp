#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gesture/image.hpp"

namespace gesture {

/// Binary probe shape with an origin cell. The origin cell is always set.
class StructuringElement {
 public:
  StructuringElement(std::size_t width, std::size_t height, std::size_t origin_row,
                     std::size_t origin_col, std::vector<std::uint8_t> cells);

  /// Builds from rows of '0'/'1' characters, e.g. {"010", "111", "010"}.
  static StructuringElement from_rows(const std::vector<std::string_view>& rows,
                                      std::size_t origin_row, std::size_t origin_col);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t origin_row() const noexcept { return origin_row_; }
  std::size_t origin_col() const noexcept { return origin_col_; }
  bool at(std::size_t row, std::size_t col) const { return cells_.at(row * width_ + col) != 0; }
  std::size_t count() const noexcept;

  /// Point reflection through the origin.
  StructuringElement reflected() const;

  /// Set cells as (dx, dy) displacements from the origin.
  struct Displacement {
    std::ptrdiff_t dx;
    std::ptrdiff_t dy;
  };
  std::vector<Displacement> displacements() const;

  friend bool operator==(const StructuringElement&, const StructuringElement&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::size_t origin_row_;
  std::size_t origin_col_;
  std::vector<std::uint8_t> cells_;
};

/// 5x5 diamond, origin at the centre.
StructuringElement erosion_element();

/// 6x6 square; origin (2, 2), the upper-left of the four central cells.
StructuringElement dilation_element();

/// Foreground iff every set cell, with the origin on the pixel, lands on foreground.
/// Pixels outside the image count as background.
BinaryMask erode(const BinaryMask& mask, const StructuringElement& se);

/// Minkowski dilation: union of the element translated to every foreground pixel.
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);

}  // namespace gesture
