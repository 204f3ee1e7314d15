#include "gesture/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gesture {

namespace {

constexpr const char* kCsvHeader = "kind,true_class,predicted_class,value";

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * fraction);
  return buf;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string report_csv(const EvalReport& report) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (std::size_t c = 0; c < report.class_names.size(); ++c) {
    out += "accuracy," + report.class_names[c] + ",," + exact(report.per_class_accuracy[c]) + "\n";
  }
  out += "overall,,," + exact(report.overall_accuracy) + "\n";
  for (std::size_t t = 0; t < report.class_names.size(); ++t) {
    for (std::size_t p = 0; p < report.class_names.size(); ++p) {
      out += "confusion," + report.class_names[t] + "," + report.class_names[p] + "," +
             std::to_string(report.confusion[t][p]) + "\n";
    }
  }
  return out;
}

std::string render_report(const EvalReport& report) {
  const std::size_t k = report.class_names.size();
  std::size_t name_width = 8;
  for (const auto& n : report.class_names) name_width = std::max(name_width, n.size() + 2);

  std::ostringstream out;
  out << "Recognition accuracy (" << report.plan.k << "-fold cross-validation, seed "
      << report.plan.seed << ")\n\n";
  out << pad_left("#", 3) << "  " << pad_right("Gesture", name_width) << pad_left("Accuracy %", 12)
      << "\n";
  for (std::size_t c = 0; c < k; ++c) {
    out << pad_left(std::to_string(c + 1), 3) << "  " << pad_right(report.class_names[c], name_width)
        << pad_left(percent(report.per_class_accuracy[c]), 12) << "\n";
  }
  out << "     " << pad_right("Overall", name_width) << pad_left(percent(report.overall_accuracy), 12)
      << "\n\n";

  std::size_t cell = 6;
  for (const auto& n : report.class_names) cell = std::max(cell, n.size() + 2);
  out << "Confusion matrix (rows: true class, columns: predicted)\n";
  out << pad_right("", name_width);
  for (const auto& n : report.class_names) out << pad_left(n, cell);
  out << "\n";
  for (std::size_t t = 0; t < k; ++t) {
    out << pad_right(report.class_names[t], name_width);
    for (std::size_t p = 0; p < k; ++p) out << pad_left(std::to_string(report.confusion[t][p]), cell);
    out << "\n";
  }
  out << "\n" << report_csv(report);
  return out.str();
}

ParsedReport parse_report_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool in_csv = false;
  ParsedReport parsed;
  std::map<std::string, std::size_t> index;
  std::vector<std::tuple<std::string, std::string, std::size_t>> cells;
  while (std::getline(in, line)) {
    if (!in_csv) {
      in_csv = line == kCsvHeader;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 4) throw std::invalid_argument("malformed report CSV line: " + line);
    if (fields[0] == "accuracy") {
      index[fields[1]] = parsed.class_names.size();
      parsed.class_names.push_back(fields[1]);
      parsed.per_class_accuracy.push_back(std::stod(fields[3]));
    } else if (fields[0] == "overall") {
      parsed.overall_accuracy = std::stod(fields[3]);
    } else if (fields[0] == "confusion") {
      cells.emplace_back(fields[1], fields[2], std::stoul(fields[3]));
    } else {
      throw std::invalid_argument("unknown report CSV row kind: " + fields[0]);
    }
  }
  if (!in_csv) throw std::invalid_argument("no report CSV block found");
  const std::size_t k = parsed.class_names.size();
  parsed.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (const auto& [t, p, count] : cells) {
    if (!index.contains(t) || !index.contains(p)) {
      throw std::invalid_argument("confusion row names an unknown class");
    }
    parsed.confusion[index[t]][index[p]] = count;
  }
  return parsed;
}

}  // namespace gesture
