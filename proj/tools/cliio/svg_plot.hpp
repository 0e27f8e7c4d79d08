#pragma once

#include <string>
#include <vector>

namespace thermaljc::cli {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 480;
};

/// Standalone SVG line plot: one polyline per series, axes with ticks,
/// labels and a legend. Non-finite points break the polyline.
std::string render_line_plot(const std::vector<Series>& series,
                             const PlotOptions& options);

/// Roughly `target` round tick positions covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace thermaljc::cli
