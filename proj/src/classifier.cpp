#include "gesture/classifier.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <set>
#include <stdexcept>

#include "gesture/random.hpp"

namespace gesture {

namespace {

struct Activations {
  std::array<double, kHidden> hidden{};
  double output = 0.0;
};

Activations evaluate(const BinaryNet& net, const NetInput& x) {
  Activations a;
  for (std::size_t j = 0; j < kHidden; ++j) {
    double z = net.hidden_bias[j];
    for (std::size_t k = 0; k < kInputs; ++k) z += net.hidden_weights[j][k] * x[k];
    a.hidden[j] = sigmoid(z);
  }
  double z = net.output_bias;
  for (std::size_t j = 0; j < kHidden; ++j) z += net.output_weights[j] * a.hidden[j];
  a.output = sigmoid(z);
  return a;
}

void check_training_set(std::span<const NetInput> samples, std::span<const int> targets) {
  if (samples.empty()) throw std::invalid_argument("training set is empty");
  if (samples.size() != targets.size()) {
    throw std::invalid_argument("training samples and targets differ in length");
  }
  for (int t : targets) {
    if (t != 0 && t != 1) throw std::invalid_argument("binary targets must be 0 or 1");
  }
}

void require_finite(const FeatureVector& f) {
  for (double v : f.as_array()) {
    if (!std::isfinite(v)) throw std::invalid_argument("feature vector has a non-finite value");
  }
}

}  // namespace

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (epochs < 1) throw std::invalid_argument("epochs must be at least 1");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
}

BinaryNet init_net(const TrainConfig& config) {
  BinaryNet net;
  if (config.init == InitMode::kZero) return net;
  Engine rng(config.seed);
  auto draw = [&] { return uniform_real(rng, -0.5, 0.5); };
  for (auto& row : net.hidden_weights) {
    for (double& w : row) w = draw();
  }
  for (double& b : net.hidden_bias) b = draw();
  for (double& v : net.output_weights) v = draw();
  net.output_bias = draw();
  return net;
}

double sigmoid(double z) noexcept { return 1.0 / (1.0 + std::exp(-z)); }

double forward(const BinaryNet& net, const NetInput& x, Activation activation) {
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("network input is not finite");
  }
  if (activation == Activation::kSigmoid) return evaluate(net, x).output;

  auto step = [](double z) { return z >= 0.0 ? 1.0 : 0.0; };
  std::array<double, kHidden> hidden{};
  for (std::size_t j = 0; j < kHidden; ++j) {
    double z = net.hidden_bias[j];
    for (std::size_t k = 0; k < kInputs; ++k) z += net.hidden_weights[j][k] * x[k];
    hidden[j] = step(z);
  }
  double z = net.output_bias;
  for (std::size_t j = 0; j < kHidden; ++j) z += net.output_weights[j] * hidden[j];
  return step(z);
}

LossGradient loss_gradient(const BinaryNet& net, std::span<const NetInput> samples,
                           std::span<const int> targets) {
  check_training_set(samples, targets);
  const double n = static_cast<double>(samples.size());
  LossGradient result;
  BinaryNet& g = result.gradient;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const NetInput& x = samples[s];
    const Activations a = evaluate(net, x);
    const double err = a.output - targets[s];
    result.loss += err * err / n;

    const double delta_out = 2.0 * err / n * a.output * (1.0 - a.output);
    g.output_bias += delta_out;
    for (std::size_t j = 0; j < kHidden; ++j) {
      g.output_weights[j] += delta_out * a.hidden[j];
      const double delta_h = delta_out * net.output_weights[j] * a.hidden[j] * (1.0 - a.hidden[j]);
      g.hidden_bias[j] += delta_h;
      for (std::size_t k = 0; k < kInputs; ++k) g.hidden_weights[j][k] += delta_h * x[k];
    }
  }
  return result;
}

double mean_squared_error(const BinaryNet& net, std::span<const NetInput> samples,
                          std::span<const int> targets) {
  check_training_set(samples, targets);
  double loss = 0.0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const double err = evaluate(net, samples[s]).output - targets[s];
    loss += err * err / static_cast<double>(samples.size());
  }
  return loss;
}

BinaryNet train_binary(std::span<const NetInput> samples, std::span<const int> targets,
                       const TrainConfig& config, const EpochObserver& observer) {
  config.validate();
  check_training_set(samples, targets);
  BinaryNet net = init_net(config);
  double previous = std::numeric_limits<double>::infinity();
  const double lr = config.learning_rate;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const LossGradient lg = loss_gradient(net, samples, targets);
    if (config.tolerance > 0.0 && previous - lg.loss < config.tolerance) break;
    previous = lg.loss;

    const BinaryNet& g = lg.gradient;
    for (std::size_t j = 0; j < kHidden; ++j) {
      for (std::size_t k = 0; k < kInputs; ++k) net.hidden_weights[j][k] -= lr * g.hidden_weights[j][k];
      net.hidden_bias[j] -= lr * g.hidden_bias[j];
      net.output_weights[j] -= lr * g.output_weights[j];
    }
    net.output_bias -= lr * g.output_bias;
    if (observer) observer(epoch, net);
  }
  return net;
}

Normalizer Normalizer::fit(std::span<const FeatureVector> features,
                           std::vector<std::size_t>* degenerate) {
  if (features.empty()) throw std::invalid_argument("cannot fit a normaliser on no samples");
  Normalizer norm;
  const double n = static_cast<double>(features.size());
  for (const FeatureVector& f : features) {
    require_finite(f);
    const auto v = f.as_array();
    for (std::size_t k = 0; k < kInputs; ++k) norm.mean[k] += v[k];
  }
  for (double& m : norm.mean) m /= n;
  std::array<double, kInputs> var{};
  for (const FeatureVector& f : features) {
    const auto v = f.as_array();
    for (std::size_t k = 0; k < kInputs; ++k) var[k] += (v[k] - norm.mean[k]) * (v[k] - norm.mean[k]);
  }
  if (degenerate != nullptr) degenerate->clear();
  for (std::size_t k = 0; k < kInputs; ++k) {
    const double sd = std::sqrt(var[k] / n);
    if (sd > 0.0) {
      norm.stddev[k] = sd;
    } else {
      norm.stddev[k] = 1.0;
      if (degenerate != nullptr) degenerate->push_back(k);
    }
  }
  return norm;
}

NetInput Normalizer::apply(const FeatureVector& f) const {
  require_finite(f);
  const auto v = f.as_array();
  NetInput x{};
  for (std::size_t k = 0; k < kInputs; ++k) x[k] = (v[k] - mean[k]) / stddev[k];
  return x;
}

void OvAModel::validate() const {
  if (class_names.size() < 2) throw std::invalid_argument("a one-against-all model needs K >= 2");
  if (nets.size() != class_names.size()) {
    throw std::invalid_argument("model has " + std::to_string(class_names.size()) +
                                " class names but " + std::to_string(nets.size()) + " nets");
  }
  std::set<std::string> unique;
  for (const auto& name : class_names) {
    if (name.empty() || name.starts_with("#") || name.find('\n') != std::string::npos) {
      throw std::invalid_argument("class name '" + name + "' is empty, starts with '#' or spans lines");
    }
    if (!unique.insert(name).second) throw std::invalid_argument("duplicate class name '" + name + "'");
  }
  for (double s : normalizer.stddev) {
    if (!(s > 0.0)) throw std::invalid_argument("normaliser standard deviations must be positive");
  }
}

OvAModel train_ova(std::span<const FeatureVector> features, std::span<const std::size_t> labels,
                   std::vector<std::string> class_names, const TrainConfig& config) {
  config.validate();
  if (features.size() != labels.size()) {
    throw std::invalid_argument("features and labels differ in length");
  }
  const std::size_t k = class_names.size();
  std::vector<std::size_t> per_class(k, 0);
  for (std::size_t label : labels) {
    if (label >= k) throw std::invalid_argument("label index out of range");
    ++per_class[label];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (per_class[c] == 0) {
      throw std::invalid_argument("class '" + class_names[c] + "' has no training samples");
    }
  }

  OvAModel model;
  model.class_names = std::move(class_names);
  model.metadata.config = config;
  std::vector<std::size_t> degenerate;
  model.normalizer = Normalizer::fit(features, &degenerate);
  for (std::size_t f : degenerate) {
    model.metadata.warnings.push_back(std::string("feature '") + kFeatureNames[f] +
                                      "' has zero variance; using std 1");
  }

  std::vector<NetInput> inputs;
  inputs.reserve(features.size());
  for (const FeatureVector& f : features) inputs.push_back(model.normalizer.apply(f));

  std::vector<std::future<BinaryNet>> jobs;
  jobs.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    jobs.push_back(std::async(std::launch::async, [&inputs, &labels, &config, c] {
      std::vector<int> targets(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) targets[i] = labels[i] == c ? 1 : 0;
      return train_binary(inputs, targets, config);
    }));
  }
  for (auto& job : jobs) model.nets.push_back(job.get());
  model.validate();
  return model;
}

std::size_t argmax(std::span<const double> scores) {
  if (scores.empty()) throw std::invalid_argument("argmax of an empty score array");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

Prediction predict(const OvAModel& model, const FeatureVector& x) {
  const NetInput input = model.normalizer.apply(x);
  Prediction p;
  p.scores.reserve(model.nets.size());
  for (const BinaryNet& net : model.nets) p.scores.push_back(forward(net, input, model.activation));
  p.label = argmax(p.scores);
  return p;
}

const char* to_string(Activation activation) noexcept {
  return activation == Activation::kStep ? "step" : "sigmoid";
}

const char* to_string(InitMode mode) noexcept {
  return mode == InitMode::kZero ? "zero" : "uniform";
}

}  // namespace gesture
