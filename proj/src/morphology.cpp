#include "gesture/morphology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gesture {

StructuringElement::StructuringElement(std::size_t width, std::size_t height,
                                       std::size_t origin_row, std::size_t origin_col,
                                       std::vector<std::uint8_t> cells)
    : width_(width),
      height_(height),
      origin_row_(origin_row),
      origin_col_(origin_col),
      cells_(std::move(cells)) {
  if (width_ == 0 || height_ == 0 || cells_.size() != width_ * height_) {
    throw std::invalid_argument("structuring element: cell count does not match its size");
  }
  if (origin_row_ >= height_ || origin_col_ >= width_) {
    throw std::invalid_argument("structuring element: origin outside the grid");
  }
  for (auto& c : cells_) c = c ? 1 : 0;
  if (!cells_[origin_row_ * width_ + origin_col_]) {
    throw std::invalid_argument("structuring element: origin cell must be set");
  }
}

StructuringElement StructuringElement::from_rows(const std::vector<std::string_view>& rows,
                                                 std::size_t origin_row, std::size_t origin_col) {
  if (rows.empty()) throw std::invalid_argument("structuring element: no rows");
  const std::size_t width = rows.front().size();
  std::vector<std::uint8_t> cells;
  for (std::string_view row : rows) {
    if (row.size() != width) throw std::invalid_argument("structuring element: ragged rows");
    for (char c : row) {
      if (c != '0' && c != '1') throw std::invalid_argument("structuring element: cells must be 0/1");
      cells.push_back(c == '1');
    }
  }
  return StructuringElement(width, rows.size(), origin_row, origin_col, std::move(cells));
}

std::size_t StructuringElement::count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

StructuringElement StructuringElement::reflected() const {
  std::vector<std::uint8_t> cells(cells_.rbegin(), cells_.rend());
  return StructuringElement(width_, height_, height_ - 1 - origin_row_, width_ - 1 - origin_col_,
                            std::move(cells));
}

std::vector<StructuringElement::Displacement> StructuringElement::displacements() const {
  std::vector<Displacement> out;
  for (std::size_t r = 0; r < height_; ++r) {
    for (std::size_t c = 0; c < width_; ++c) {
      if (cells_[r * width_ + c]) {
        out.push_back({static_cast<std::ptrdiff_t>(c) - static_cast<std::ptrdiff_t>(origin_col_),
                       static_cast<std::ptrdiff_t>(r) - static_cast<std::ptrdiff_t>(origin_row_)});
      }
    }
  }
  return out;
}

StructuringElement erosion_element() {
  return StructuringElement::from_rows({"00100", "01110", "11111", "01110", "00100"}, 2, 2);
}

StructuringElement dilation_element() {
  return StructuringElement::from_rows(
      {"111111", "111111", "111111", "111111", "111111", "111111"}, 2, 2);
}

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se) {
  if (mask.empty()) throw ImageError("erode: empty mask");
  const auto offsets = se.displacements();
  BinaryMask out(mask.width(), mask.height());
  for (std::size_t y = 0; y < mask.height(); ++y) {
    for (std::size_t x = 0; x < mask.width(); ++x) {
      bool fits = true;
      for (const auto& d : offsets) {
        const auto sx = static_cast<std::ptrdiff_t>(x) + d.dx;
        const auto sy = static_cast<std::ptrdiff_t>(y) + d.dy;
        if (!mask.contains(sx, sy) || !mask.at(std::size_t(sx), std::size_t(sy))) {
          fits = false;
          break;
        }
      }
      out.at(x, y) = fits ? 1 : 0;
    }
  }
  return out;
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
  if (mask.empty()) throw ImageError("dilate: empty mask");
  const auto offsets = se.displacements();
  BinaryMask out(mask.width(), mask.height());
  for (std::size_t y = 0; y < mask.height(); ++y) {
    for (std::size_t x = 0; x < mask.width(); ++x) {
      if (!mask.at(x, y)) continue;
      for (const auto& d : offsets) {
        const auto tx = static_cast<std::ptrdiff_t>(x) + d.dx;
        const auto ty = static_cast<std::ptrdiff_t>(y) + d.dy;
        if (out.contains(tx, ty)) out.at(std::size_t(tx), std::size_t(ty)) = 1;
      }
    }
  }
  return out;
}

}  // namespace gesture
