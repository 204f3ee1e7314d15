#include "gesture/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <functional>
#include <optional>
#include <thread>

#include "gesture/pnm.hpp"

namespace gesture {

namespace fs = std::filesystem;

std::vector<std::size_t> Dataset::class_sizes() const {
  std::vector<std::size_t> sizes(class_names.size(), 0);
  for (const Sample& s : samples) ++sizes.at(s.label);
  return sizes;
}

bool is_pnm_path(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

FeatureVector image_features(const RgbImage& image, const SegmentConfig& config) {
  const SegmentationResult seg = segment_pipeline(image, config);
  return features_of_region(seg.masked_gray, seg.mask);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

DatasetLoad load_dataset(const fs::path& root, const SegmentConfig& config) {
  config.canny.validate();
  if (!fs::is_directory(root)) throw DatasetError(root.string() + " is not a directory");

  std::vector<std::string> classes;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) classes.push_back(entry.path().filename().string());
  }
  if (classes.empty()) throw DatasetError(root.string() + " has no class subdirectories");
  std::sort(classes.begin(), classes.end());

  struct Job {
    std::string path;
    std::size_t label;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& entry : fs::directory_iterator(root / classes[c])) {
      if (entry.is_regular_file() && is_pnm_path(entry.path())) {
        jobs.push_back({entry.path().string(), c});
      }
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.path < b.path; });

  std::vector<std::optional<FeatureVector>> features(jobs.size());
  std::vector<std::string> problems(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    try {
      features[i] = image_features(load_rgb(jobs[i].path), config);
    } catch (const EmptyRegionError&) {
      problems[i] = jobs[i].path + ": empty mask, skipped";
    } catch (const PnmError& e) {
      problems[i] = std::string(e.what()) + ", skipped";
    }
  });

  DatasetLoad load;
  load.dataset.class_names = classes;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (features[i]) {
      load.dataset.samples.push_back({*features[i], jobs[i].label, jobs[i].path});
    } else {
      load.warnings.push_back(problems[i]);
    }
  }
  const auto sizes = load.dataset.class_sizes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (sizes[c] == 0) throw DatasetError("class '" + classes[c] + "' has no usable images");
  }
  return load;
}

}  // namespace gesture
