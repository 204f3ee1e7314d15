#include "gesture/model_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "gesture/atomic_file.hpp"

namespace gesture {

namespace {

constexpr const char* kMagic = "ovamodel";
constexpr const char* kVersion = "v1";

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Range>
std::string join_numbers(const Range& values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ' ';
    line += format_number(v);
  }
  return line;
}

class LineReader {
 public:
  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(line);
    }
    // A trailing comment block holds metadata; everything before it is payload.
    end_ = lines_.size();
    while (end_ > 0 && (lines_[end_ - 1].empty() || lines_[end_ - 1].starts_with("#"))) --end_;
  }

  bool at_end() const noexcept { return pos_ >= end_; }

  const std::string& next(const char* what) {
    if (at_end()) {
      throw ModelFormatError(ModelErrorKind::kTruncated,
                             std::string("model file ends before ") + what);
    }
    return lines_[pos_++];
  }

  std::vector<std::string> metadata() const {
    return {lines_.begin() + static_cast<std::ptrdiff_t>(end_), lines_.end()};
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

template <std::size_t N>
std::array<double, N> parse_numbers(const std::string& line, const char* what) {
  std::array<double, N> out{};
  const char* p = line.c_str();
  for (std::size_t i = 0; i < N; ++i) {
    char* end = nullptr;
    errno = 0;
    out[i] = std::strtod(p, &end);
    if (end == p || errno == ERANGE || !std::isfinite(out[i])) {
      throw ModelFormatError(ModelErrorKind::kMalformed,
                             std::string("expected ") + std::to_string(N) + " numbers for " + what);
    }
    p = end;
  }
  while (*p == ' ' || *p == '\t') ++p;
  if (*p != '\0') {
    throw ModelFormatError(ModelErrorKind::kMalformed,
                           std::string("unexpected trailing data in ") + what);
  }
  return out;
}

std::string value_of(const std::string& token, const std::string& key) {
  if (!token.starts_with(key + "=")) {
    throw ModelFormatError(ModelErrorKind::kMalformed, "model header lacks '" + key + "='");
  }
  return token.substr(key.size() + 1);
}

void parse_config_line(const std::string& line, TrainConfig& config) {
  std::istringstream in(line.substr(std::string("# config").size()));
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "learning_rate") config.learning_rate = std::stod(value);
      else if (key == "epochs") config.epochs = std::stoi(value);
      else if (key == "init") config.init = value == "zero" ? InitMode::kZero : InitMode::kUniform;
      else if (key == "seed") config.seed = std::stoull(value);
      else if (key == "tolerance") config.tolerance = std::stod(value);
    } catch (const std::exception&) {
      throw ModelFormatError(ModelErrorKind::kMalformed, "bad metadata value for " + key);
    }
  }
}

}  // namespace

std::string serialize_model(const OvAModel& model) {
  model.validate();
  std::string out = std::string(kMagic) + " " + kVersion + " K=" +
                    std::to_string(model.class_count()) + " activation=" +
                    to_string(model.activation) + "\n";
  out += join_numbers(model.normalizer.mean) + "\n";
  out += join_numbers(model.normalizer.stddev) + "\n";
  for (std::size_t c = 0; c < model.class_count(); ++c) {
    const BinaryNet& net = model.nets[c];
    out += model.class_names[c] + "\n";
    std::vector<double> weights;
    for (const auto& row : net.hidden_weights) weights.insert(weights.end(), row.begin(), row.end());
    out += join_numbers(weights) + "\n";
    out += join_numbers(net.hidden_bias) + "\n";
    out += join_numbers(net.output_weights) + "\n";
    out += format_number(net.output_bias) + "\n";
  }
  const TrainConfig& cfg = model.metadata.config;
  out += "# config learning_rate=" + format_number(cfg.learning_rate) +
         " epochs=" + std::to_string(cfg.epochs) + " init=" + to_string(cfg.init) +
         " seed=" + std::to_string(cfg.seed) + " tolerance=" + format_number(cfg.tolerance) + "\n";
  for (const auto& w : model.metadata.warnings) out += "# warning " + w + "\n";
  return out;
}

OvAModel parse_model(const std::string& text) {
  LineReader reader(text);
  std::istringstream header(reader.next("the header"));
  std::string magic, version, k_token, activation_token;
  header >> magic >> version >> k_token >> activation_token;
  if (magic != kMagic) throw ModelFormatError(ModelErrorKind::kMalformed, "not an ovamodel file");
  if (version != kVersion) {
    throw ModelFormatError(ModelErrorKind::kVersionMismatch,
                           "unsupported model version '" + version + "' (expected v1)");
  }
  std::size_t k = 0;
  try {
    k = std::stoul(value_of(k_token, "K"));
  } catch (const std::logic_error&) {
    throw ModelFormatError(ModelErrorKind::kMalformed, "model header has a bad class count");
  }
  OvAModel model;
  const std::string activation = value_of(activation_token, "activation");
  if (activation == "sigmoid") {
    model.activation = Activation::kSigmoid;
  } else if (activation == "step") {
    model.activation = Activation::kStep;
  } else {
    throw ModelFormatError(ModelErrorKind::kMalformed, "unknown activation '" + activation + "'");
  }

  model.normalizer.mean = parse_numbers<kInputs>(reader.next("normaliser means"), "normaliser means");
  model.normalizer.stddev =
      parse_numbers<kInputs>(reader.next("normaliser deviations"), "normaliser deviations");

  while (!reader.at_end()) {
    model.class_names.push_back(reader.next("a class name"));
    BinaryNet net;
    const auto w = parse_numbers<kInputs * kHidden>(reader.next("hidden weights"), "hidden weights");
    for (std::size_t j = 0; j < kHidden; ++j) {
      for (std::size_t i = 0; i < kInputs; ++i) net.hidden_weights[j][i] = w[j * kInputs + i];
    }
    net.hidden_bias = parse_numbers<kHidden>(reader.next("hidden biases"), "hidden biases");
    net.output_weights = parse_numbers<kHidden>(reader.next("output weights"), "output weights");
    net.output_bias = parse_numbers<1>(reader.next("the output bias"), "output bias")[0];
    model.nets.push_back(net);
  }
  if (model.nets.size() != k) {
    throw ModelFormatError(ModelErrorKind::kInconsistent,
                           "header declares K=" + std::to_string(k) + " but file holds " +
                               std::to_string(model.nets.size()) + " class networks");
  }

  for (const std::string& line : reader.metadata()) {
    if (line.starts_with("# config")) {
      parse_config_line(line, model.metadata.config);
    } else if (line.starts_with("# warning ")) {
      model.metadata.warnings.push_back(line.substr(std::string("# warning ").size()));
    }
  }

  try {
    model.validate();
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(ModelErrorKind::kInconsistent, e.what());
  }
  return model;
}

void save_model(const OvAModel& model, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_model(model));
}

OvAModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFormatError(ModelErrorKind::kMissingFile, "cannot open model " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model(text.str());
}

}  // namespace gesture
