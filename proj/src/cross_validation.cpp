#include "gesture/cross_validation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gesture/random.hpp"

namespace gesture {

namespace {

void check_plan(const Dataset& dataset, const FoldPlan& plan) {
  if (plan.assignment.size() != dataset.samples.size()) {
    throw std::invalid_argument("fold plan does not match the dataset size");
  }
  for (std::size_t f : plan.assignment) {
    if (f >= plan.k) throw std::invalid_argument("fold plan assigns a fold index >= k");
  }
}

}  // namespace

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan stratified_folds(const Dataset& dataset, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("cross-validation needs k >= 2 folds");
  FoldPlan plan{k, seed, std::vector<std::size_t>(dataset.samples.size(), 0)};
  Engine rng(seed);
  for (std::size_t c = 0; c < dataset.class_count(); ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
      if (dataset.samples[i].label == c) members.push_back(i);
    }
    if (members.size() < k) {
      throw std::invalid_argument("class '" + dataset.class_names[c] + "' has " +
                                  std::to_string(members.size()) + " samples, fewer than k=" +
                                  std::to_string(k));
    }
    // Fisher-Yates
    for (std::size_t i = members.size() - 1; i > 0; --i) {
      std::swap(members[i], members[uniform_below(rng, i + 1)]);
    }
    for (std::size_t pos = 0; pos < members.size(); ++pos) plan.assignment[members[pos]] = pos % k;
  }
  return plan;
}

OvAModel train_fold(const Dataset& dataset, const FoldPlan& plan, std::size_t fold,
                    const TrainConfig& config) {
  check_plan(dataset, plan);
  std::vector<std::size_t> train = plan.train_indices(fold);
  std::stable_sort(train.begin(), train.end(), [&](std::size_t a, std::size_t b) {
    return dataset.samples[a].path < dataset.samples[b].path;
  });
  std::vector<FeatureVector> features;
  std::vector<std::size_t> labels;
  for (std::size_t i : train) {
    features.push_back(dataset.samples[i].features);
    labels.push_back(dataset.samples[i].label);
  }
  return train_ova(features, labels, dataset.class_names, config);
}

EvalReport cross_validate(const Dataset& dataset, const FoldPlan& plan, const TrainConfig& config) {
  check_plan(dataset, plan);
  const std::size_t k = dataset.class_count();
  EvalReport report;
  report.class_names = dataset.class_names;
  report.confusion.assign(k, std::vector<std::size_t>(k, 0));
  report.plan = plan;
  report.config = config;
  report.predictions.assign(dataset.samples.size(), 0);

  for (std::size_t fold = 0; fold < plan.k; ++fold) {
    const auto test = plan.test_indices(fold);
    if (test.empty()) continue;
    const OvAModel model = train_fold(dataset, plan, fold, config);
    for (std::size_t i : test) {
      const Sample& s = dataset.samples[i];
      const std::size_t predicted = predict(model, s.features).label;
      report.predictions[i] = predicted;
      ++report.confusion[s.label][predicted];
    }
  }

  std::size_t correct = 0;
  report.per_class_accuracy.assign(k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t total = std::accumulate(report.confusion[c].begin(), report.confusion[c].end(),
                                              std::size_t{0});
    correct += report.confusion[c][c];
    report.per_class_accuracy[c] = total == 0 ? 0.0 : double(report.confusion[c][c]) / double(total);
  }
  report.overall_accuracy =
      dataset.samples.empty() ? 0.0 : double(correct) / double(dataset.samples.size());
  return report;
}

}  // namespace gesture
