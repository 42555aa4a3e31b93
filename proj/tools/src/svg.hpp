#pragma once

#include <string>
#include <vector>

namespace ssblow::cli {

struct Series {
  std::string label;
  std::vector<double> y;
};

/// Minimal standalone SVG line plot of several series over a shared x.
/// With log_y, non-positive values are skipped.
std::string svg_line_plot(const std::string& title, const std::string& x_label, const std::vector<double>& x,
                          const std::vector<Series>& series, bool log_y = false);

}  // namespace ssblow::cli
