#pragma once

#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gesture/features.hpp"
#include "gesture/segmentation.hpp"

namespace gesture {

struct Sample {
  FeatureVector features;
  std::size_t label = 0;
  std::string path;
};

/// Labelled feature vectors, ordered lexicographically by source path.
struct Dataset {
  std::vector<Sample> samples;
  std::vector<std::string> class_names;

  std::size_t class_count() const noexcept { return class_names.size(); }
  std::vector<std::size_t> class_sizes() const;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetLoad {
  Dataset dataset;
  /// One message per skipped image (unreadable or empty segmentation).
  std::vector<std::string> warnings;
};

/// True for .pgm, .ppm and .pnm files (case-insensitive).
bool is_pnm_path(const std::filesystem::path& path);

/// Segments one image and computes its region features; throws EmptyRegionError
/// when the segmentation is empty.
FeatureVector image_features(const RgbImage& image, const SegmentConfig& config);

/**
 * Walks `root/<class>/<image>`: class names are the sorted subdirectory names and
 * every PNM image inside runs through segmentation and feature extraction.
 * Unreadable images and images that segment to nothing are skipped with a
 * warning; a class left with no images is an error. Images are processed in
 * parallel; the result does not depend on scheduling.
 */
DatasetLoad load_dataset(const std::filesystem::path& root, const SegmentConfig& config = {});

/// Runs `fn(i)` for i in [0, n) on up to hardware_concurrency threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gesture
