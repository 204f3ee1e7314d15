#include <doctest.h>

#include <filesystem>

#include "gesture/model_io.hpp"
#include "support/fixtures.hpp"

using namespace gesture;

namespace {

OvAModel small_model(std::size_t classes = 5) {
  const Dataset data = testing::gaussian_clusters(classes, 6, 6.0, 211);
  std::vector<FeatureVector> f;
  std::vector<std::size_t> l;
  for (const auto& s : data.samples) {
    f.push_back(s.features);
    l.push_back(s.label);
  }
  TrainConfig c;
  c.epochs = 30;
  c.seed = 9;
  c.learning_rate = 0.123;
  return train_ova(f, l, data.class_names, c);
}

ModelErrorKind kind_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ModelFormatError& e) {
    return e.kind();
  }
  FAIL("parse_model accepted the text");
  return ModelErrorKind::kMalformed;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace

TEST_CASE("save and load reproduce the model exactly") {
  const OvAModel model = small_model();
  testing::TempDir dir;
  save_model(model, dir / "m.txt");
  const OvAModel back = load_model(dir / "m.txt");
  CHECK(back.class_names == model.class_names);
  CHECK(back.nets == model.nets);
  CHECK(back.normalizer == model.normalizer);
  CHECK(back.activation == model.activation);
  CHECK(back.metadata.config.learning_rate == 0.123);
  CHECK(back.metadata.config.epochs == 30);
  CHECK(back.metadata.config.seed == 9);

  Engine rng(223);
  for (int i = 0; i < 100; ++i) {
    FeatureVector x{uniform_real(rng, 50, 200), uniform_real(rng, 0, 2000), testing::normal(rng),
                    testing::normal(rng), uniform01(rng), uniform_real(rng, 0, 8)};
    CHECK(predict(back, x).scores == predict(model, x).scores);
  }
  CHECK(serialize_model(back) == serialize_model(model));
}

TEST_CASE("layout") {
  const auto lines = lines_of(serialize_model(small_model(2)));
  REQUIRE(lines.size() == 3 + 2 * 5 + 1);
  CHECK(lines[0] == "ovamodel v1 K=2 activation=sigmoid");
  CHECK(lines[3] == "class0");
  CHECK(lines[8] == "class1");
  CHECK(lines[13].starts_with("# config "));
}

TEST_CASE("warnings and step activation survive a round trip") {
  OvAModel model = small_model(3);
  model.metadata.warnings = {"feature 'energy' has zero variance; using std 1"};
  model.activation = Activation::kStep;
  const OvAModel back = parse_model(serialize_model(model));
  CHECK(back.metadata.warnings == model.metadata.warnings);
  CHECK(back.activation == Activation::kStep);
}

TEST_CASE("missing file") {
  testing::TempDir dir;
  try {
    load_model(dir / "absent.txt");
    FAIL("expected an error");
  } catch (const ModelFormatError& e) {
    CHECK(e.kind() == ModelErrorKind::kMissingFile);
  }
}

TEST_CASE("truncated file") {
  auto lines = lines_of(serialize_model(small_model()));
  // Drop the metadata and the last class's output bias.
  while (lines.back().starts_with("#")) lines.pop_back();
  lines.pop_back();
  CHECK(kind_of(join(lines)) == ModelErrorKind::kTruncated);
  CHECK(kind_of("") == ModelErrorKind::kTruncated);
  CHECK(kind_of("ovamodel v1 K=2 activation=sigmoid\n") == ModelErrorKind::kTruncated);
}

TEST_CASE("class count mismatch") {
  auto lines = lines_of(serialize_model(small_model()));
  while (lines.back().starts_with("#")) lines.pop_back();
  lines.resize(lines.size() - 5);  // K=5 in the header, 4 class blocks left
  CHECK(kind_of(join(lines)) == ModelErrorKind::kInconsistent);
}

TEST_CASE("version mismatch") {
  auto lines = lines_of(serialize_model(small_model()));
  lines[0] = "ovamodel v2 K=5 activation=sigmoid";
  CHECK(kind_of(join(lines)) == ModelErrorKind::kVersionMismatch);
}

TEST_CASE("malformed content") {
  const auto base = lines_of(serialize_model(small_model()));
  auto bad_magic = base;
  bad_magic[0] = "model v1 K=5 activation=sigmoid";
  CHECK(kind_of(join(bad_magic)) == ModelErrorKind::kMalformed);

  auto bad_count = base;
  bad_count[0] = "ovamodel v1 K=five activation=sigmoid";
  CHECK(kind_of(join(bad_count)) == ModelErrorKind::kMalformed);

  auto bad_activation = base;
  bad_activation[0] = "ovamodel v1 K=5 activation=relu";
  CHECK(kind_of(join(bad_activation)) == ModelErrorKind::kMalformed);

  auto short_row = base;
  short_row[1] = "1 2 3 4 5";
  CHECK(kind_of(join(short_row)) == ModelErrorKind::kMalformed);

  auto long_row = base;
  long_row[1] += " 7";
  CHECK(kind_of(join(long_row)) == ModelErrorKind::kMalformed);

  auto text_row = base;
  text_row[5] = "0 0 abc";
  CHECK(kind_of(join(text_row)) == ModelErrorKind::kMalformed);

  for (const char* v : {"nan", "inf", "1e999"}) {
    auto non_finite = base;
    non_finite[7] = v;
    CHECK(kind_of(join(non_finite)) == ModelErrorKind::kMalformed);
  }
}

TEST_CASE("invalid model contents") {
  auto dup = lines_of(serialize_model(small_model(2)));
  dup[8] = dup[3];
  CHECK(kind_of(join(dup)) == ModelErrorKind::kInconsistent);

  auto zero_std = lines_of(serialize_model(small_model(2)));
  zero_std[2] = "1 1 0 1 1 1";
  CHECK(kind_of(join(zero_std)) == ModelErrorKind::kInconsistent);
}

TEST_CASE("carriage returns are tolerated") {
  const OvAModel model = small_model(2);
  std::string crlf;
  for (const auto& l : lines_of(serialize_model(model))) crlf += l + "\r\n";
  CHECK(parse_model(crlf).nets == model.nets);
}

TEST_CASE("save refuses an invalid model and leaves no file") {
  OvAModel model = small_model(2);
  model.nets.pop_back();
  testing::TempDir dir;
  CHECK_THROWS_AS(save_model(model, dir / "m.txt"), std::invalid_argument);
  CHECK(std::filesystem::is_empty(dir.path()));
}
