#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "gesture/image.hpp"

namespace gesture {

enum class PnmErrorKind {
  kMissingFile,
  kMalformedHeader,
  kUnsupportedMaxval,
  kTruncatedData,
  kUnwritable,
  kInvalidImage,
};

class PnmError : public std::runtime_error {
 public:
  PnmError(PnmErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  PnmErrorKind kind() const noexcept { return kind_; }

 private:
  PnmErrorKind kind_;
};

using PnmImage = std::variant<GrayImage, RgbImage>;

/// Reads a binary P5 (gray) or P6 (RGB) file with maxval 255. `#` comments in the
/// header are skipped.
PnmImage load_pnm(const std::filesystem::path& path);

/// Loads any PNM and promotes gray to three equal channels.
RgbImage load_rgb(const std::filesystem::path& path);

/// Loads any PNM and reduces RGB to BT.601 luma.
GrayImage load_gray(const std::filesystem::path& path);

// Writes are atomic: the file only appears at `path` once fully written.
void save_pnm(const GrayImage& image, const std::filesystem::path& path);
void save_pnm(const RgbImage& image, const std::filesystem::path& path);
/// Serialized as P5 with foreground 255 and background 0.
void save_pnm(const BinaryMask& mask, const std::filesystem::path& path);

/// Loads a P5 file as a mask: nonzero samples are foreground.
BinaryMask load_mask(const std::filesystem::path& path);

}  // namespace gesture
