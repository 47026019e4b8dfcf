#include "zslab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "zslab/csv.hpp"

namespace zslab::svg {

namespace {

struct Bounds {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
};

Bounds data_bounds(std::span<const Series> series, bool include_unit_square) {
  bool any = false;
  Bounds b{1e300, -1e300, 1e300, -1e300};
  for (const Series& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      b.xmin = std::min(b.xmin, s.x[i]);
      b.xmax = std::max(b.xmax, s.x[i]);
      b.ymin = std::min(b.ymin, s.y[i]);
      b.ymax = std::max(b.ymax, s.y[i]);
      any = true;
    }
  }
  if (!any) throw std::runtime_error("svg: nothing to plot (no finite points)");
  if (include_unit_square) {
    b.xmin = std::min(b.xmin, 0.0);
    b.xmax = std::max(b.xmax, 1.0);
    b.ymin = std::min(b.ymin, 0.0);
    b.ymax = std::max(b.ymax, 1.0);
  }
  auto widen = [](double& lo, double& hi) {
    const double span = hi - lo;
    const double pad = span > 0.0 ? span * 0.05 : std::max(1.0, std::fabs(lo)) * 0.05;
    lo -= pad;
    hi += pad;
  };
  widen(b.xmin, b.xmax);
  widen(b.ymin, b.ymax);
  return b;
}

std::string ticks(double lo, double hi, int count, std::vector<double>& values) {
  // Round tick spacing to 1/2/5 times a power of ten.
  const double raw = (hi - lo) / count;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (mult * mag >= raw) {
      step = mult * mag;
      break;
    }
  }
  values.clear();
  for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    values.push_back(std::fabs(v) < step * 1e-9 ? 0.0 : v);
  }
  return format_double(step);
}

}  // namespace

void write_plot(const std::string& path, std::span<const Series> series, const PlotOptions& options) {
  const Bounds b = data_bounds(series, options.unit_square_guides);
  const double margin_left = 64, margin_right = 16, margin_top = 16, margin_bottom = 48;
  const double plot_w = options.width - margin_left - margin_right;
  const double plot_h = options.height - margin_top - margin_bottom;
  auto px = [&](double x) { return margin_left + (x - b.xmin) / (b.xmax - b.xmin) * plot_w; };
  auto py = [&](double y) { return margin_top + (b.ymax - y) / (b.ymax - b.ymin) * plot_h; };
  auto f = [](double v) { return format_double(std::round(v * 100.0) / 100.0); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("svg: cannot open for writing: " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes frame.
  out << "<rect x=\"" << f(margin_left) << "\" y=\"" << f(margin_top) << "\" width=\"" << f(plot_w)
      << "\" height=\"" << f(plot_h) << "\" fill=\"none\" stroke=\"#374151\" stroke-width=\"1\"/>\n";

  std::vector<double> tick_values;
  ticks(b.xmin, b.xmax, 6, tick_values);
  for (double v : tick_values) {
    out << "<line x1=\"" << f(px(v)) << "\" y1=\"" << f(margin_top + plot_h) << "\" x2=\"" << f(px(v))
        << "\" y2=\"" << f(margin_top + plot_h + 5) << "\" stroke=\"#374151\"/>\n";
    out << "<text x=\"" << f(px(v)) << "\" y=\"" << f(margin_top + plot_h + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#111827\">" << format_double(v)
        << "</text>\n";
  }
  ticks(b.ymin, b.ymax, 6, tick_values);
  for (double v : tick_values) {
    out << "<line x1=\"" << f(margin_left - 5) << "\" y1=\"" << f(py(v)) << "\" x2=\"" << f(margin_left)
        << "\" y2=\"" << f(py(v)) << "\" stroke=\"#374151\"/>\n";
    out << "<text x=\"" << f(margin_left - 8) << "\" y=\"" << f(py(v) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#111827\">" << format_double(v)
        << "</text>\n";
  }

  out << "<text x=\"" << f(margin_left + plot_w / 2) << "\" y=\"" << f(options.height - 10)
      << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111827\">" << options.x_label
      << "</text>\n";
  out << "<text x=\"14\" y=\"" << f(margin_top + plot_h / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111827\" transform=\"rotate(-90 14 "
      << f(margin_top + plot_h / 2) << ")\">" << options.y_label << "</text>\n";

  if (options.unit_square_guides) {
    for (double v : {0.0, 1.0}) {
      out << "<line x1=\"" << f(px(v)) << "\" y1=\"" << f(margin_top) << "\" x2=\"" << f(px(v))
          << "\" y2=\"" << f(margin_top + plot_h)
          << "\" stroke=\"#9ca3af\" stroke-dasharray=\"5,4\" stroke-width=\"1\"/>\n";
      out << "<line x1=\"" << f(margin_left) << "\" y1=\"" << f(py(v)) << "\" x2=\""
          << f(margin_left + plot_w) << "\" y2=\"" << f(py(v))
          << "\" stroke=\"#9ca3af\" stroke-dasharray=\"5,4\" stroke-width=\"1\"/>\n";
    }
    out << "<rect x=\"" << f(px(0.0)) << "\" y=\"" << f(py(1.0)) << "\" width=\""
        << f(px(1.0) - px(0.0)) << "\" height=\"" << f(py(0.0) - py(1.0))
        << "\" fill=\"none\" stroke=\"#6b7280\" stroke-width=\"1.5\"/>\n";
  }

  int label_slot = 0;
  for (const Series& s : series) {
    if (s.points_only) {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        if (s.square_markers) {
          out << "<rect x=\"" << f(px(s.x[i]) - s.marker_size) << "\" y=\""
              << f(py(s.y[i]) - s.marker_size) << "\" width=\"" << f(2 * s.marker_size)
              << "\" height=\"" << f(2 * s.marker_size) << "\" fill=\"" << s.color << "\"/>\n";
        } else {
          out << "<circle cx=\"" << f(px(s.x[i])) << "\" cy=\"" << f(py(s.y[i])) << "\" r=\""
              << f(s.marker_size) << "\" fill=\"" << s.color << "\"/>\n";
        }
      }
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.2\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        out << f(px(s.x[i])) << ',' << f(py(s.y[i])) << ' ';
      }
      out << "\"/>\n";
    }
    if (!s.label.empty()) {
      const double ly = margin_top + 16 + 16 * label_slot++;
      out << "<rect x=\"" << f(margin_left + 10) << "\" y=\"" << f(ly - 8)
          << "\" width=\"10\" height=\"10\" fill=\"" << s.color << "\"/>\n";
      out << "<text x=\"" << f(margin_left + 26) << "\" y=\"" << f(ly + 1)
          << "\" font-size=\"12\" fill=\"#111827\">" << s.label << "</text>\n";
    }
  }

  out << "</svg>\n";
  if (!out) throw std::runtime_error("svg: write failed: " + path);
}

}  // namespace zslab::svg
