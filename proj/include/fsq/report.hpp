#pragma once

#include <string>
#include <vector>

namespace fsq {

/// One verified identity. Exact cases pass only with residual exactly 0; numeric
/// cases pass when residual < tolerance.
struct ReportEntry {
  std::string identity;
  std::string anchor;  ///< human readable statement of what was compared
  int m = 0;
  int k = 0;
  bool exact = true;
  double residual = 0.0;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;

  bool pass() const { return exact ? residual == 0.0 : residual < tolerance; }
};

inline bool all_pass(const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries)
    if (!e.pass()) return false;
  return true;
}

}  // namespace fsq
