#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gesture/features.hpp"

namespace gesture {

inline constexpr std::size_t kInputs = kFeatureCount;
inline constexpr std::size_t kHidden = 3;

using NetInput = std::array<double, kInputs>;

enum class Activation { kSigmoid, kStep };

/// 6-3-1 feed-forward network scoring one class against the rest.
struct BinaryNet {
  std::array<std::array<double, kInputs>, kHidden> hidden_weights{};
  std::array<double, kHidden> hidden_bias{};
  std::array<double, kHidden> output_weights{};
  double output_bias = 0.0;

  friend bool operator==(const BinaryNet&, const BinaryNet&) = default;
};

enum class InitMode { kUniform, kZero };

struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 500;
  /// kUniform draws every parameter from U(-0.5, 0.5); kZero starts from all zeros.
  InitMode init = InitMode::kUniform;
  std::uint64_t seed = 1;
  /// Stop once an epoch improves the mean loss by less than this; 0 runs every epoch.
  double tolerance = 1e-6;

  void validate() const;
};

BinaryNet init_net(const TrainConfig& config);

double sigmoid(double z) noexcept;

/// Output score in [0, 1]. Step activation maps z >= 0 to 1.
double forward(const BinaryNet& net, const NetInput& x, Activation activation = Activation::kSigmoid);

/// Mean squared error of a sigmoid net and its gradient with respect to every
/// parameter; `gradient` has the same layout as the net.
struct LossGradient {
  double loss = 0.0;
  BinaryNet gradient;
};

LossGradient loss_gradient(const BinaryNet& net, std::span<const NetInput> samples,
                           std::span<const int> targets);

double mean_squared_error(const BinaryNet& net, std::span<const NetInput> samples,
                          std::span<const int> targets);

using EpochObserver = std::function<void(int epoch, const BinaryNet& net)>;

/// Full-batch gradient descent on MSE with 0/1 targets, sigmoid activations and
/// fixed sample order. `observer`, when set, sees the net after every update.
BinaryNet train_binary(std::span<const NetInput> samples, std::span<const int> targets,
                       const TrainConfig& config, const EpochObserver& observer = {});

/// Per-feature z-scoring fitted on a training set.
struct Normalizer {
  std::array<double, kInputs> mean{};
  std::array<double, kInputs> stddev{1, 1, 1, 1, 1, 1};

  /// Fits population mean/std; features with zero spread get std 1 and are listed
  /// in `degenerate` when it is non-null.
  static Normalizer fit(std::span<const FeatureVector> features,
                        std::vector<std::size_t>* degenerate = nullptr);

  NetInput apply(const FeatureVector& f) const;

  friend bool operator==(const Normalizer&, const Normalizer&) = default;
};

struct ModelMetadata {
  TrainConfig config;
  std::vector<std::string> warnings;
};

/// One binary net per class plus the normaliser they were trained behind.
struct OvAModel {
  std::vector<std::string> class_names;
  std::vector<BinaryNet> nets;
  Normalizer normalizer;
  Activation activation = Activation::kSigmoid;
  ModelMetadata metadata;

  std::size_t class_count() const noexcept { return class_names.size(); }

  /// Throws std::invalid_argument unless K >= 2, names are unique and non-empty,
  /// and there is one net per class.
  void validate() const;
};

/// Fits the normaliser on `features`, then trains class k's net on targets
/// [label == k]. The K trainings are independent and run concurrently.
OvAModel train_ova(std::span<const FeatureVector> features, std::span<const std::size_t> labels,
                   std::vector<std::string> class_names, const TrainConfig& config = {});

struct Prediction {
  std::size_t label = 0;
  std::vector<double> scores;
};

/// Index of the largest score; the lowest index wins ties.
std::size_t argmax(std::span<const double> scores);

Prediction predict(const OvAModel& model, const FeatureVector& x);

const char* to_string(Activation activation) noexcept;
const char* to_string(InitMode mode) noexcept;

}  // namespace gesture
