#include <doctest.h>

#include <filesystem>

#include "gesture/atomic_file.hpp"
#include "gesture/pnm.hpp"
#include "support/fixtures.hpp"

using namespace gesture;
using gesture::testing::TempDir;

namespace {

PnmErrorKind load_error(const std::filesystem::path& path) {
  try {
    load_pnm(path);
  } catch (const PnmError& e) {
    return e.kind();
  }
  FAIL("load_pnm accepted " << path);
  return PnmErrorKind::kInvalidImage;
}

}  // namespace

TEST_CASE("load P5 and P6 payloads") {
  TempDir dir;
  testing::write_bytes(dir / "a.pgm", std::string("P5\n2 2\n255\n") + std::string("\x00\x40\x80\xff", 4));
  const auto gray = std::get<GrayImage>(load_pnm(dir / "a.pgm"));
  CHECK(gray == GrayImage(2, 2, std::vector<std::uint8_t>{0, 64, 128, 255}));

  testing::write_bytes(dir / "b.ppm", std::string("P6 1 1 255\n") + std::string("\xff\x00\x00", 3));
  const auto rgb = std::get<RgbImage>(load_pnm(dir / "b.ppm"));
  CHECK(rgb.width() == 1);
  CHECK(rgb.at(0, 0) == Rgb{255, 0, 0});
}

TEST_CASE("header comments are skipped") {
  TempDir dir;
  testing::write_bytes(dir / "c.pgm", "P5\n# made by hand\n3 # width\n1\n255\nabc");
  const auto gray = std::get<GrayImage>(load_pnm(dir / "c.pgm"));
  CHECK(gray.width() == 3);
  CHECK(gray.at(2, 0) == 'c');
}

TEST_CASE("payload bytes that look like whitespace are data") {
  TempDir dir;
  testing::write_bytes(dir / "w.pgm", std::string("P5\n2 1\n255\n") + "\n ");
  const auto gray = std::get<GrayImage>(load_pnm(dir / "w.pgm"));
  CHECK(gray.at(0, 0) == '\n');
  CHECK(gray.at(1, 0) == ' ');
}

TEST_CASE("load errors are distinguished") {
  TempDir dir;
  CHECK(load_error(dir / "missing.pgm") == PnmErrorKind::kMissingFile);

  testing::write_bytes(dir / "p2.pgm", "P2\n1 1\n255\n0\n");
  CHECK(load_error(dir / "p2.pgm") == PnmErrorKind::kMalformedHeader);

  testing::write_bytes(dir / "nowidth.pgm", "P5\nx 1\n255\n0");
  CHECK(load_error(dir / "nowidth.pgm") == PnmErrorKind::kMalformedHeader);

  testing::write_bytes(dir / "zero.pgm", "P5\n0 1\n255\n");
  CHECK(load_error(dir / "zero.pgm") == PnmErrorKind::kMalformedHeader);

  testing::write_bytes(dir / "maxval.pgm", "P5\n1 1\n65535\n\x01\x02");
  CHECK(load_error(dir / "maxval.pgm") == PnmErrorKind::kUnsupportedMaxval);

  testing::write_bytes(dir / "short.pgm", "P5\n4 4\n255\n" + std::string(8, 'x'));
  CHECK(load_error(dir / "short.pgm") == PnmErrorKind::kTruncatedData);

  testing::write_bytes(dir / "short.ppm", "P6\n2 1\n255\n" + std::string(5, 'x'));
  CHECK(load_error(dir / "short.ppm") == PnmErrorKind::kTruncatedData);
}

TEST_CASE("round-trips are bit-exact") {
  TempDir dir;
  Engine rng(12);
  for (int i = 0; i < 25; ++i) {
    const auto w = 1 + uniform_below(rng, 50);
    const auto h = 1 + uniform_below(rng, 50);
    const GrayImage g = testing::random_gray(w, h, rng);
    save_pnm(g, dir / "g.pgm");
    CHECK(std::get<GrayImage>(load_pnm(dir / "g.pgm")) == g);

    RgbImage c(w, h);
    for (auto& p : c.data()) p = {std::uint8_t(rng() >> 56), std::uint8_t(rng() >> 56), std::uint8_t(rng() >> 56)};
    save_pnm(c, dir / "c.ppm");
    CHECK(std::get<RgbImage>(load_pnm(dir / "c.ppm")) == c);

    const BinaryMask m = testing::random_mask(w, h, 0.4, rng);
    save_pnm(m, dir / "m.pgm");
    CHECK(load_mask(dir / "m.pgm") == m);
  }
}

TEST_CASE("mask encodes foreground as 255") {
  TempDir dir;
  save_pnm(BinaryMask(2, 1, std::vector<std::uint8_t>{1, 0}), dir / "m.pgm");
  CHECK(testing::read_file(dir / "m.pgm") == std::string("P5\n2 1\n255\n\xff\x00", 13));
}

TEST_CASE("empty images are rejected before writing") {
  TempDir dir;
  try {
    save_pnm(GrayImage{}, dir / "e.pgm");
    FAIL("empty image was written");
  } catch (const PnmError& e) {
    CHECK(e.kind() == PnmErrorKind::kInvalidImage);
  }
  CHECK_FALSE(std::filesystem::exists(dir / "e.pgm"));
}

TEST_CASE("unwritable destination") {
  TempDir dir;
  try {
    save_pnm(GrayImage(1, 1), dir / "no" / "such" / "dir.pgm");
    FAIL("write into a missing directory succeeded");
  } catch (const PnmError& e) {
    CHECK(e.kind() == PnmErrorKind::kUnwritable);
  }
}

TEST_CASE("load_rgb and load_gray convert between formats") {
  TempDir dir;
  save_pnm(GrayImage(1, 1, 77), dir / "g.pgm");
  CHECK(load_rgb(dir / "g.pgm").at(0, 0) == Rgb{77, 77, 77});
  RgbImage c(1, 1);
  c.at(0, 0) = {255, 0, 0};
  save_pnm(c, dir / "c.ppm");
  CHECK(load_gray(dir / "c.ppm").at(0, 0) == 76);
  CHECK_THROWS_AS(load_mask(dir / "c.ppm"), PnmError);
}

TEST_CASE("atomic write replaces the target and leaves no temporary") {
  TempDir dir;
  write_file_atomic(dir / "f.txt", "first");
  write_file_atomic(dir / "f.txt", "second");
  CHECK(testing::read_file(dir / "f.txt") == "second");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path())) ++entries;
  CHECK(entries == 1);
  CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "f.txt", "x"), WriteError);
}
