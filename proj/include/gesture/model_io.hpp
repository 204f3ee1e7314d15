#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "gesture/classifier.hpp"

namespace gesture {

enum class ModelErrorKind { kMissingFile, kMalformed, kVersionMismatch, kTruncated, kInconsistent };

class ModelFormatError : public std::runtime_error {
 public:
  ModelFormatError(ModelErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ModelErrorKind kind() const noexcept { return kind_; }

 private:
  ModelErrorKind kind_;
};

/*
 * Text format, one item per line:
 *
 *   ovamodel v1 K=<k> activation=<sigmoid|step>
 *   <6 feature means>
 *   <6 feature standard deviations>
 *   then per class:
 *     <class name>
 *     <18 hidden weights, row-major>
 *     <3 hidden biases>
 *     <3 output weights>
 *     <1 output bias>
 *   # config learning_rate=... epochs=... init=... seed=... tolerance=...
 *   # warning <text>            (zero or more)
 *
 * Numbers are written with 17 significant digits, so loading reproduces every
 * parameter exactly.
 */
std::string serialize_model(const OvAModel& model);
OvAModel parse_model(const std::string& text);

void save_model(const OvAModel& model, const std::filesystem::path& path);
OvAModel load_model(const std::filesystem::path& path);

}  // namespace gesture
