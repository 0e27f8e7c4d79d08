#include "cliio/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace thermaljc::cli {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double value, int digits) {
  char buffer[64];
  const auto r = std::to_chars(buffer, buffer + sizeof(buffer), value,
                               std::chars_format::fixed, digits);
  return std::string(buffer, r.ptr);
}

std::string tick_label(double value, double step) {
  if (value == 0.0) return "0";
  const int digits = std::clamp(static_cast<int>(-std::floor(std::log10(step))), 0, 6);
  return fixed(value, digits);
}

struct Bounds {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    } else if (lo == hi) {
      const double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target) {
  std::vector<double> ticks;
  if (!(hi > lo) || target < 1) return ticks;
  const double raw = (hi - lo) / target;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (const double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * magnitude;
    if (step >= raw) break;
  }
  const double first = std::ceil(lo / step - 1e-9) * step;
  for (double v = first; v <= hi + 1e-9 * step; v += step) {
    ticks.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  return ticks;
}

std::string render_line_plot(const std::vector<Series>& series,
                             const PlotOptions& options) {
  Bounds xb;
  Bounds yb;
  for (const auto& s : series) {
    for (const double v : s.x) xb.add(v);
    for (const double v : s.y) yb.add(v);
  }
  xb.settle();
  yb.settle();

  const double left = 70.0;
  const double right = 160.0;
  const double top = 40.0;
  const double bottom = 55.0;
  const double plot_w = options.width - left - right;
  const double plot_h = options.height - top - bottom;
  auto px = [&](double x) { return left + (x - xb.lo) / (xb.hi - xb.lo) * plot_w; };
  auto py = [&](double y) { return top + (yb.hi - y) / (yb.hi - yb.lo) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width
      << ' ' << options.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (!options.title.empty()) {
    svg << "<text x=\"" << fixed(left + plot_w / 2, 1) << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-size=\"15\">" << escape(options.title) << "</text>\n";
  }

  svg << "<g class=\"axes\" stroke=\"#444\" stroke-width=\"1\">\n"
      << "<rect x=\"" << fixed(left, 1) << "\" y=\"" << fixed(top, 1) << "\" width=\""
      << fixed(plot_w, 1) << "\" height=\"" << fixed(plot_h, 1) << "\" fill=\"none\"/>\n";
  const auto xticks = nice_ticks(xb.lo, xb.hi);
  const auto yticks = nice_ticks(yb.lo, yb.hi);
  const double xstep = xticks.size() > 1 ? xticks[1] - xticks[0] : 1.0;
  const double ystep = yticks.size() > 1 ? yticks[1] - yticks[0] : 1.0;
  for (const double t : xticks) {
    const double x = px(t);
    svg << "<line x1=\"" << fixed(x, 2) << "\" y1=\"" << fixed(top + plot_h, 2) << "\" x2=\""
        << fixed(x, 2) << "\" y2=\"" << fixed(top + plot_h + 5, 2) << "\"/>\n";
  }
  for (const double t : yticks) {
    const double y = py(t);
    svg << "<line x1=\"" << fixed(left - 5, 2) << "\" y1=\"" << fixed(y, 2) << "\" x2=\""
        << fixed(left, 2) << "\" y2=\"" << fixed(y, 2) << "\"/>\n";
  }
  svg << "</g>\n<g class=\"tick-labels\" fill=\"#222\">\n";
  for (const double t : xticks) {
    svg << "<text x=\"" << fixed(px(t), 2) << "\" y=\"" << fixed(top + plot_h + 19, 2)
        << "\" text-anchor=\"middle\">" << tick_label(t, xstep) << "</text>\n";
  }
  for (const double t : yticks) {
    svg << "<text x=\"" << fixed(left - 8, 2) << "\" y=\"" << fixed(py(t) + 4, 2)
        << "\" text-anchor=\"end\">" << tick_label(t, ystep) << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<text class=\"x-label\" x=\"" << fixed(left + plot_w / 2, 1) << "\" y=\""
      << fixed(options.height - 12.0, 1) << "\" text-anchor=\"middle\">"
      << escape(options.x_label) << "</text>\n";
  svg << "<text class=\"y-label\" transform=\"translate(18," << fixed(top + plot_h / 2, 1)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(options.y_label) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* colour = kPalette[k % kPalette.size()];
    svg << "<g class=\"series\" data-name=\"" << escape(s.name) << "\">\n";
    std::ostringstream points;
    std::size_t count = 0;
    auto flush = [&] {
      if (count > 0) {
        svg << "<polyline fill=\"none\" stroke=\"" << colour
            << "\" stroke-width=\"1.5\" points=\"" << points.str() << "\"/>\n";
      }
      points.str("");
      count = 0;
    };
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      if (count) points << ' ';
      points << fixed(px(s.x[i]), 2) << ',' << fixed(py(s.y[i]), 2);
      ++count;
    }
    flush();
    svg << "</g>\n";

    const double ly = top + 14.0 + 18.0 * static_cast<double>(k);
    const double lx = left + plot_w + 14.0;
    svg << "<line x1=\"" << fixed(lx, 1) << "\" y1=\"" << fixed(ly, 1) << "\" x2=\""
        << fixed(lx + 24, 1) << "\" y2=\"" << fixed(ly, 1) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fixed(lx + 30, 1) << "\" y=\"" << fixed(ly + 4, 1) << "\">"
        << escape(s.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace thermaljc::cli
