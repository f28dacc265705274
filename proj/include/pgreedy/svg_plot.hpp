#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pgreedy {

struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "blue";
  bool dotted = false;
  std::string label;
};

struct PlotAxes {
  std::string title;
  std::string x_label = "n";
  std::string y_label;
  bool log_x = false;
  bool log_y = true;
};

/// Self-contained SVG line plot. Non-positive values on a log axis are
/// skipped. Output contains no timestamps.
void write_svg_plot(std::ostream& out, const PlotAxes& axes, std::span<const PlotSeries> series);

}  // namespace pgreedy
