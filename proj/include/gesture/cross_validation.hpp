#pragma once

#include <cstdint>
#include <vector>

#include "gesture/classifier.hpp"
#include "gesture/dataset.hpp"

namespace gesture {

/// Test-fold index for every sample of a dataset.
struct FoldPlan {
  std::size_t k = 10;
  std::uint64_t seed = 0;
  std::vector<std::size_t> assignment;

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
};

/// Per class: shuffle that class's samples with the seeded generator and deal
/// them round-robin into k folds. Every class must have at least k samples.
FoldPlan stratified_folds(const Dataset& dataset, std::size_t k, std::uint64_t seed);

/// Model for one fold: normaliser and nets fitted on the other k - 1 folds only.
/// Training samples are taken in source-path order.
OvAModel train_fold(const Dataset& dataset, const FoldPlan& plan, std::size_t fold,
                    const TrainConfig& config);

struct EvalReport {
  std::vector<std::string> class_names;
  std::vector<double> per_class_accuracy;
  double overall_accuracy = 0.0;
  /// confusion[true][predicted]
  std::vector<std::vector<std::size_t>> confusion;
  FoldPlan plan;
  TrainConfig config;
  /// Predicted label per dataset sample.
  std::vector<std::size_t> predictions;
};

/// Trains and tests once per fold and pools every prediction into one confusion matrix.
EvalReport cross_validate(const Dataset& dataset, const FoldPlan& plan, const TrainConfig& config);

}  // namespace gesture
