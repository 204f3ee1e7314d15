#pragma once

#include <filesystem>
#include <stdexcept>
#include <string_view>

namespace gesture {

class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `contents` to a sibling temporary file and renames it over `path`, so a
/// failure never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace gesture
