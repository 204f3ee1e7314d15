#pragma once

#include <string>
#include <vector>

#include "gesture/cross_validation.hpp"

namespace gesture {

/// Long-format CSV of a report:
///   kind,true_class,predicted_class,value
///   accuracy,<class>,,<fraction>
///   overall,,,<fraction>
///   confusion,<true>,<predicted>,<count>
std::string report_csv(const EvalReport& report);

/// Per-class accuracy table (percent, two decimals), overall accuracy, the K x K
/// confusion matrix, then the CSV block.
std::string render_report(const EvalReport& report);

struct ParsedReport {
  std::vector<std::string> class_names;
  std::vector<double> per_class_accuracy;
  double overall_accuracy = 0.0;
  std::vector<std::vector<std::size_t>> confusion;
};

/// Reads the CSV produced by report_csv (a leading rendered table is skipped).
ParsedReport parse_report_csv(const std::string& text);

}  // namespace gesture
