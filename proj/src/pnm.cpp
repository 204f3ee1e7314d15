#include "gesture/pnm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "gesture/atomic_file.hpp"

namespace gesture {

namespace {

class HeaderReader {
 public:
  HeaderReader(const std::vector<char>& bytes, const std::string& name)
      : bytes_(bytes), name_(name) {}

  std::size_t next_number(const char* field) {
    skip_whitespace_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      throw PnmError(PnmErrorKind::kMalformedHeader,
                     name_ + ": expected " + field + " in PNM header");
    }
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 31)) {
        throw PnmError(PnmErrorKind::kMalformedHeader, name_ + ": " + field + " out of range");
      }
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the payload.
  std::size_t payload_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw PnmError(PnmErrorKind::kMalformedHeader,
                     name_ + ": missing whitespace after maxval");
    }
    return pos_ + 1;
  }

  void skip(std::size_t n) { pos_ += n; }

 private:
  void skip_whitespace_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = static_cast<unsigned char>(bytes_[pos_]);
      if (std::isspace(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<char>& bytes_;
  const std::string& name_;
  std::size_t pos_ = 0;
};

std::string encode(const char* magic, std::size_t w, std::size_t h,
                   std::span<const std::uint8_t> payload) {
  std::string out = std::string(magic) + "\n" + std::to_string(w) + " " + std::to_string(h) +
                    "\n255\n";
  out.append(reinterpret_cast<const char*>(payload.data()), payload.size());
  return out;
}

void write_or_throw(const std::filesystem::path& path, const std::string& contents) {
  try {
    write_file_atomic(path, contents);
  } catch (const WriteError& e) {
    throw PnmError(PnmErrorKind::kUnwritable, e.what());
  }
}

void require_nonempty(bool empty, const std::filesystem::path& path) {
  if (empty) {
    throw PnmError(PnmErrorKind::kInvalidImage,
                   "refusing to write empty image to " + path.string());
  }
}

}  // namespace

PnmImage load_pnm(const std::filesystem::path& path) {
  const std::string name = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PnmError(PnmErrorKind::kMissingFile, name + ": cannot open file");
  const std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());

  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw PnmError(PnmErrorKind::kMalformedHeader, name + ": not a binary P5/P6 file");
  }
  const bool rgb = bytes[1] == '6';
  HeaderReader reader(bytes, name);
  reader.skip(2);
  const std::size_t width = reader.next_number("width");
  const std::size_t height = reader.next_number("height");
  const std::size_t maxval = reader.next_number("maxval");
  if (width == 0 || height == 0) {
    throw PnmError(PnmErrorKind::kMalformedHeader, name + ": zero image dimension");
  }
  if (maxval != 255) {
    throw PnmError(PnmErrorKind::kUnsupportedMaxval,
                   name + ": maxval " + std::to_string(maxval) + " (only 255 supported)");
  }
  const std::size_t offset = reader.payload_offset();
  const std::size_t needed = width * height * (rgb ? 3 : 1);
  if (bytes.size() < offset + needed) {
    throw PnmError(PnmErrorKind::kTruncatedData,
                   name + ": expected " + std::to_string(needed) + " payload bytes, found " +
                       std::to_string(bytes.size() > offset ? bytes.size() - offset : 0));
  }

  const auto* payload = reinterpret_cast<const std::uint8_t*>(bytes.data() + offset);
  if (!rgb) {
    return GrayImage(width, height, std::vector<std::uint8_t>(payload, payload + needed));
  }
  std::vector<Rgb> pixels(width * height);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = Rgb{payload[3 * i], payload[3 * i + 1], payload[3 * i + 2]};
  }
  return RgbImage(width, height, std::move(pixels));
}

RgbImage load_rgb(const std::filesystem::path& path) {
  auto image = load_pnm(path);
  if (auto* gray = std::get_if<GrayImage>(&image)) return gray_to_rgb(*gray);
  return std::get<RgbImage>(std::move(image));
}

GrayImage load_gray(const std::filesystem::path& path) {
  auto image = load_pnm(path);
  if (auto* rgb = std::get_if<RgbImage>(&image)) return rgb_to_gray(*rgb);
  return std::get<GrayImage>(std::move(image));
}

BinaryMask load_mask(const std::filesystem::path& path) {
  auto image = load_pnm(path);
  const auto* gray = std::get_if<GrayImage>(&image);
  if (gray == nullptr) {
    throw PnmError(PnmErrorKind::kMalformedHeader, path.string() + ": mask must be P5");
  }
  BinaryMask mask(gray->width(), gray->height());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = (*gray)[i] != 0 ? 1 : 0;
  return mask;
}

void save_pnm(const GrayImage& image, const std::filesystem::path& path) {
  require_nonempty(image.empty(), path);
  write_or_throw(path, encode("P5", image.width(), image.height(), image.data()));
}

void save_pnm(const RgbImage& image, const std::filesystem::path& path) {
  require_nonempty(image.empty(), path);
  std::vector<std::uint8_t> payload;
  payload.reserve(image.size() * 3);
  for (const Rgb& p : image.data()) {
    payload.push_back(p.r);
    payload.push_back(p.g);
    payload.push_back(p.b);
  }
  write_or_throw(path, encode("P6", image.width(), image.height(), payload));
}

void save_pnm(const BinaryMask& mask, const std::filesystem::path& path) {
  require_nonempty(mask.empty(), path);
  std::vector<std::uint8_t> payload(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) payload[i] = mask[i] ? 255 : 0;
  write_or_throw(path, encode("P5", mask.width(), mask.height(), payload));
}

}  // namespace gesture
