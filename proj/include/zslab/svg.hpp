#pragma once

#include <span>
#include <string>
#include <vector>

namespace zslab::svg {

// One plotted series: a polyline by default, standalone markers when
// points_only is set (squares or dots).
struct Series {
  std::vector<double> x, y;
  std::string color = "#1f6feb";
  bool points_only = false;
  bool square_markers = false;
  double marker_size = 2.0;
  std::string label;
};

struct PlotOptions {
  std::string x_label, y_label;
  // Draw the unit square and dashed guides at 0 and 1 on both axes
  // (the natural frame for z-space orbits).
  bool unit_square_guides = false;
  int width = 720;
  int height = 540;
};

// Self-contained SVG file; throws std::runtime_error when the file cannot be
// written or no series contains a finite point.
void write_plot(const std::string& path, std::span<const Series> series, const PlotOptions& options);

}  // namespace zslab::svg
