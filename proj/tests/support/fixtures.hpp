#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gesture/dataset.hpp"
#include "gesture/image.hpp"
#include "gesture/random.hpp"

namespace gesture::testing {

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, const std::string& bytes);

double normal(Engine& rng);

GrayImage random_gray(std::size_t w, std::size_t h, Engine& rng);
BinaryMask random_mask(std::size_t w, std::size_t h, double density, Engine& rng);

/// 256x256 restoration target: flat regions, full-height and rectangular step
/// edges and a smooth bright Gaussian blob.
GrayImage restoration_test_image();

/// Axis-aligned polygonal hand: palm, four fingers and a thumb, all built from
/// rectangles at least 14 pixels wide with gaps of 10 pixels.
BinaryMask hand_truth(std::size_t w = 256, std::size_t h = 256);

/// Saturated-yellow hand on a neutral-gray textured background.
RgbImage hand_image(const BinaryMask& truth, std::uint64_t seed = 3);

/// Variant used for synthetic datasets: the hand's brightness level and
/// texture amplitude select the class, so region statistics separate classes.
RgbImage class_hand_image(std::size_t class_index, std::uint64_t seed, std::size_t size = 64);

/// Filled disk of value `inside` on `outside`; pixel centres within `radius` are inside.
GrayImage disk_image(std::size_t size, double cx, double cy, double radius, std::uint8_t inside,
                     std::uint8_t outside);

double iou(const BinaryMask& a, const BinaryMask& b);

/// Number of 8-connected foreground components.
std::size_t components8(const BinaryMask& mask);
/// Number of 4-connected background components.
std::size_t background_components4(const BinaryMask& mask);

/// Distance from the centre of pixel (x, y) to the boundary of the union of
/// the truth mask's pixel squares (the geometric outline of the shape).
std::vector<double> distances_to_outline(const BinaryMask& edges, const BinaryMask& truth);

/// `classes` Gaussian clusters in 6-D, `per_class` samples each. In
/// standardised units any two class means are `separation` sigma apart (class c
/// is offset along axis c); each dimension is then mapped to a feature-like scale. Paths are "c<class>/<index>" so the
/// path order equals generation order.
Dataset gaussian_clusters(std::size_t classes, std::size_t per_class, double separation,
                          std::uint64_t seed);

/// Writes a tree `root/<class>/img_NN.ppm` of class_hand_image fixtures.
void write_hand_dataset(const std::filesystem::path& root, std::size_t classes,
                        std::size_t per_class, std::size_t size = 64);

}  // namespace gesture::testing
