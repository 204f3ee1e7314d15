#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "gesture/atomic_file.hpp"
#include "gesture/classifier.hpp"
#include "gesture/cross_validation.hpp"
#include "gesture/dataset.hpp"
#include "gesture/denoise.hpp"
#include "gesture/model_io.hpp"
#include "gesture/pnm.hpp"
#include "gesture/report.hpp"
#include "gesture/segmentation.hpp"

namespace gesture::cli {

namespace {

namespace fs = std::filesystem;

/// Raised while checking options, before any work starts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Fn>
void validated(Fn&& fn) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Options shared by every command that segments images.
struct SegmentOptions {
  bool invert = false;
  bool denoise = false;

  void add_to(CLI::App& cmd) {
    cmd.add_flag("--invert", invert, "Treat the low-b* side of the threshold as the hand");
    cmd.add_flag("--denoise", denoise,
                 "Filter each colour channel with MDWMF (thresholds 33,23,16) before segmenting");
  }

  SegmentConfig config() const {
    SegmentConfig cfg;
    cfg.invert = invert;
    if (denoise) cfg.denoise = MdwmfConfig{};
    return cfg;
  }
};

struct TrainOptions {
  double learning_rate = 0.1;
  int epochs = 500;
  std::string init = "uniform";
  std::uint64_t seed = 1;
  double tolerance = 1e-6;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--lr", learning_rate, "Gradient descent learning rate");
    cmd.add_option("--epochs", epochs, "Maximum full-batch epochs per class network");
    cmd.add_option("--init", init, "Weight initialisation")
        ->check(CLI::IsMember({"uniform", "zero"}));
    cmd.add_option("--train-seed", seed, "Seed for uniform(-0.5, 0.5) initialisation");
    cmd.add_option("--tolerance", tolerance,
                   "Stop when an epoch improves the loss by less than this (0 = never)");
  }

  TrainConfig config() const {
    TrainConfig cfg;
    cfg.learning_rate = learning_rate;
    cfg.epochs = epochs;
    cfg.init = init == "zero" ? InitMode::kZero : InitMode::kUniform;
    cfg.seed = seed;
    cfg.tolerance = tolerance;
    validated([&] { cfg.validate(); });
    return cfg;
  }
};

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

// ---- noise ---------------------------------------------------------------

struct NoiseCommand {
  std::string input;
  std::string output;
  double density = 0.4;
  std::uint64_t seed = 0;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("noise", "Inject random-value impulse noise");
    cmd->add_option("input", input, "Input PGM/PPM")->required();
    cmd->add_option("output", output, "Output path")->required();
    cmd->add_option("--density", density, "Probability that a pixel is replaced")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", seed, "Noise seed");
  }

  int run(std::ostream& out) const {
    auto image = load_pnm(input);
    std::size_t corrupted = 0;
    std::size_t total = 0;
    if (auto* gray = std::get_if<GrayImage>(&image)) {
      const RvinResult noisy = inject_rvin_tracked(*gray, density, seed);
      corrupted = noisy.corrupted_count;
      total = gray->size();
      save_pnm(noisy.image, output);
    } else {
      // Each channel is corrupted independently with its own derived seed.
      RgbImage rgb = std::get<RgbImage>(image);
      for (int channel = 0; channel < 3; ++channel) {
        auto member = channel == 0 ? &Rgb::r : channel == 1 ? &Rgb::g : &Rgb::b;
        GrayImage plane(rgb.width(), rgb.height());
        for (std::size_t i = 0; i < rgb.size(); ++i) plane[i] = rgb[i].*member;
        const RvinResult noisy = inject_rvin_tracked(plane, density, seed + channel);
        for (std::size_t i = 0; i < rgb.size(); ++i) rgb[i].*member = noisy.image[i];
        corrupted += noisy.corrupted_count;
        total += plane.size();
      }
      save_pnm(rgb, output);
    }
    out << "corrupted " << corrupted << " of " << total << " samples\n";
    return kExitOk;
  }
};

// ---- denoise -------------------------------------------------------------

struct DenoiseCommand {
  std::string input;
  std::string output;
  std::vector<int> thresholds{33, 23, 16};
  int weight = 2;
  std::string directions = "pairs";

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("denoise", "Remove impulse noise with the MDWMF filter");
    cmd->add_option("input", input, "Input PGM/PPM")->required();
    cmd->add_option("output", output, "Output path")->required();
    cmd->add_option("--thresholds", thresholds, "Comma-separated detection threshold per pass")
        ->delimiter(',');
    cmd->add_option("--weight", weight, "Median weight of the smoothest direction and centre");
    cmd->add_option("--directions", directions,
                    "Direction set: 'pairs' (12 antipodal pairs) or 'lines' (8 collinear lines)")
        ->check(CLI::IsMember({"pairs", "lines"}));
  }

  int run(std::ostream& out) const {
    MdwmfConfig config;
    config.thresholds = thresholds;
    config.weight = weight;
    config.directions = directions == "lines" ? collinear_directions() : default_directions();
    validated([&] { config.validate(); });

    auto image = load_pnm(input);
    std::vector<std::size_t> changed;
    if (auto* gray = std::get_if<GrayImage>(&image)) {
      MdwmfResult result = mdwmf_detailed(*gray, config);
      changed = result.changed_per_iteration;
      save_pnm(result.image, output);
    } else {
      save_pnm(denoise_rgb(std::get<RgbImage>(image), config, &changed), output);
    }
    for (std::size_t i = 0; i < changed.size(); ++i) {
      out << "iteration " << i + 1 << " threshold " << config.thresholds[i] << " changed "
          << changed[i] << "\n";
    }
    return kExitOk;
  }
};

// ---- segment -------------------------------------------------------------

struct SegmentCommand {
  std::string input;
  std::string mask_out;
  std::string masked_out;
  std::string edges_out;
  CannyParams canny;
  SegmentOptions segment;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("segment", "Segment the hand region of an RGB image");
    cmd->add_option("input", input, "Input PPM (PGM is promoted to RGB)")->required();
    cmd->add_option("--mask", mask_out, "Write the cleaned binary mask (P5)");
    cmd->add_option("--masked", masked_out, "Write the masked grayscale image (P5)");
    cmd->add_option("--edges", edges_out, "Write the Canny edge map (P5)");
    cmd->add_option("--sigma", canny.sigma, "Canny Gaussian sigma");
    cmd->add_option("--low", canny.low, "Canny low threshold, fraction of max gradient");
    cmd->add_option("--high", canny.high, "Canny high threshold, fraction of max gradient");
    segment.add_to(*cmd);
  }

  int run(std::ostream& out, std::ostream& err) const {
    SegmentConfig config = segment.config();
    config.canny = canny;
    validated([&] { config.canny.validate(); });

    const SegmentationResult result = segment_pipeline(load_rgb(input), config);
    if (count_foreground(result.mask) == 0) err << "warning: empty mask for " << input << "\n";
    if (!mask_out.empty()) save_pnm(result.mask, mask_out);
    if (!masked_out.empty()) save_pnm(result.masked_gray, masked_out);
    if (!edges_out.empty()) save_pnm(result.edges, edges_out);
    out << "threshold " << fixed6(result.threshold) << "\n";
    return kExitOk;
  }
};

// ---- features ------------------------------------------------------------

struct FeaturesCommand {
  std::vector<std::string> inputs;
  std::string csv;
  SegmentOptions segment;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("features", "Write first-order histogram features as CSV");
    cmd->add_option("inputs", inputs, "Input images; the label is the parent directory name")
        ->required();
    cmd->add_option("--csv", csv, "Output CSV path (default: standard output)");
    segment.add_to(*cmd);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const SegmentConfig config = segment.config();
    std::vector<std::string> rows(inputs.size());
    std::vector<std::string> warnings(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t i) {
      try {
        const FeatureVector f = image_features(load_rgb(inputs[i]), config);
        std::string row = inputs[i] + "," + fs::path(inputs[i]).parent_path().filename().string();
        for (double v : f.as_array()) row += "," + sig9(v);
        rows[i] = row + "\n";
      } catch (const EmptyRegionError&) {
        warnings[i] = inputs[i] + ": empty mask, row skipped";
      } catch (const PnmError& e) {
        warnings[i] = std::string(e.what()) + ", row skipped";
      }
    });

    std::string text = "path,label";
    for (const char* name : kFeatureNames) text += std::string(",") + name;
    text += "\n";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!warnings[i].empty()) err << "warning: " << warnings[i] << "\n";
      text += rows[i];
    }
    if (csv.empty()) {
      out << text;
    } else {
      write_file_atomic(csv, text);
    }
    return kExitOk;
  }
};

// ---- train / predict / evaluate -------------------------------------------

struct TrainCommand {
  std::string data_root;
  std::string model_out;
  TrainOptions train;
  SegmentOptions segment;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("train", "Train a one-against-all model on a dataset tree");
    cmd->add_option("data-root", data_root, "Directory with one subdirectory per class")
        ->required();
    cmd->add_option("model-out", model_out, "Where to write the model")->required();
    train.add_to(*cmd);
    segment.add_to(*cmd);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const TrainConfig config = train.config();
    const DatasetLoad load = load_dataset(data_root, segment.config());
    print_warnings(load.warnings, err);

    std::vector<FeatureVector> features;
    std::vector<std::size_t> labels;
    for (const Sample& s : load.dataset.samples) {
      features.push_back(s.features);
      labels.push_back(s.label);
    }
    const OvAModel model = train_ova(features, labels, load.dataset.class_names, config);
    print_warnings(model.metadata.warnings, err);
    save_model(model, model_out);
    out << "trained " << model.class_count() << " class networks on " << features.size()
        << " samples\n";
    return kExitOk;
  }
};

struct PredictCommand {
  std::string model_path;
  std::string image;
  SegmentOptions segment;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("predict", "Classify one image with a trained model");
    cmd->add_option("model", model_path, "Model file written by 'train'")->required();
    cmd->add_option("image", image, "Input image")->required();
    segment.add_to(*cmd);
  }

  int run(std::ostream& out) const {
    const OvAModel model = load_model(model_path);
    const Prediction p = predict(model, image_features(load_rgb(image), segment.config()));
    out << "predicted " << model.class_names[p.label] << "\n";
    for (std::size_t c = 0; c < p.scores.size(); ++c) {
      out << model.class_names[c] << " " << sig9(p.scores[c]) << "\n";
    }
    return kExitOk;
  }
};

struct EvaluateCommand {
  std::string data_root;
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::string report_csv_path;
  TrainOptions train;
  SegmentOptions segment;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("evaluate", "Stratified k-fold cross-validation report");
    cmd->add_option("data-root", data_root, "Directory with one subdirectory per class")
        ->required();
    cmd->add_option("--folds", folds, "Number of folds")->check(CLI::Range(2, 1000));
    cmd->add_option("--seed", seed, "Fold shuffling seed");
    cmd->add_option("--report-csv", report_csv_path, "Also write the report CSV block here");
    train.add_to(*cmd);
    segment.add_to(*cmd);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const TrainConfig config = train.config();
    const DatasetLoad load = load_dataset(data_root, segment.config());
    print_warnings(load.warnings, err);
    FoldPlan plan;
    validated([&] { plan = stratified_folds(load.dataset, folds, seed); });
    const EvalReport report = cross_validate(load.dataset, plan, config);
    out << render_report(report);
    if (!report_csv_path.empty()) write_file_atomic(report_csv_path, report_csv(report));
    return kExitOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Static hand-gesture recognition: denoising, segmentation, features, classification"};
  app.name("gesture");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  NoiseCommand noise;
  DenoiseCommand denoise;
  SegmentCommand segment;
  FeaturesCommand features;
  TrainCommand train;
  PredictCommand predict_cmd;
  EvaluateCommand evaluate;
  noise.add_to(app);
  denoise.add_to(app);
  segment.add_to(app);
  features.add_to(app);
  train.add_to(app);
  predict_cmd.add_to(app);
  evaluate.add_to(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "noise") return noise.run(out);
    if (command == "denoise") return denoise.run(out);
    if (command == "segment") return segment.run(out, err);
    if (command == "features") return features.run(out, err);
    if (command == "train") return train.run(out, err);
    if (command == "predict") return predict_cmd.run(out);
    if (command == "evaluate") return evaluate.run(out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << "error: unknown command " << command << "\n";
  return kExitUsage;
}

}  // namespace gesture::cli
