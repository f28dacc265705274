#include "pgreedy/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

namespace pgreedy {
namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 80, kRight = 20, kTop = 40, kBottom = 60;

struct Axis {
  bool log = false;
  double lo = 0.0, hi = 1.0;

  double transform(double v) const { return log ? std::log10(v) : v; }
  bool usable(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

void fit_range(Axis& axis, std::span<const PlotSeries> series, bool use_x) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& s : series) {
    const auto& v = use_x ? s.x : s.y;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!axis.usable(s.x[i]) && use_x) continue;
      if (!axis.usable(v[i])) continue;
      lo = std::min(lo, axis.transform(v[i]));
      hi = std::max(hi, axis.transform(v[i]));
    }
  }
  if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
  if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  if (axis.log) lo = std::floor(lo), hi = std::ceil(hi);
  axis.lo = lo;
  axis.hi = hi;
}

std::vector<double> ticks(const Axis& axis) {
  std::vector<double> out;
  if (axis.log) {
    const double step = std::max(1.0, std::ceil((axis.hi - axis.lo) / 8.0));
    for (double t = axis.lo; t <= axis.hi + 1e-9; t += step) out.push_back(t);
  } else {
    const double raw = (axis.hi - axis.lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double step = raw / mag < 2 ? 2 * mag : raw / mag < 5 ? 5 * mag : 10 * mag;
    for (double t = std::ceil(axis.lo / step) * step; t <= axis.hi + 1e-9 * step; t += step) out.push_back(t);
  }
  return out;
}

std::string tick_label(const Axis& axis, double t) {
  if (axis.log) return fmt::format("1e{}", static_cast<int>(std::lround(t)));
  return fmt::format("{:g}", t);
}

}  // namespace

void write_svg_plot(std::ostream& out, const PlotAxes& axes, std::span<const PlotSeries> series) {
  Axis ax{axes.log_x}, ay{axes.log_y};
  fit_range(ax, series, true);
  fit_range(ay, series, false);

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (ax.transform(v) - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto py = [&](double v) { return kTop + ph - (ay.transform(v) - ay.lo) / (ay.hi - ay.lo) * ph; };

  out << fmt::format(R"svg(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">)svg", kWidth,
                     kHeight, kWidth, kHeight)
      << '\n';
  out << R"svg(<rect width="100%" height="100%" fill="white"/>)svg" << '\n';
  out << fmt::format(R"svg(<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)svg", kLeft, kTop, pw, ph)
      << '\n';

  for (double t : ticks(ax)) {
    const double x = kLeft + (t - ax.lo) / (ax.hi - ax.lo) * pw;
    out << fmt::format(R"svg(<line x1="{:.2f}" y1="{}" x2="{:.2f}" y2="{}" stroke="#ddd"/>)svg", x, kTop, x, kTop + ph) << '\n';
    out << fmt::format(R"svg(<text x="{:.2f}" y="{}" font-size="11" text-anchor="middle">{}</text>)svg", x, kTop + ph + 16,
                       tick_label(ax, t))
        << '\n';
  }
  for (double t : ticks(ay)) {
    const double y = kTop + ph - (t - ay.lo) / (ay.hi - ay.lo) * ph;
    out << fmt::format(R"svg(<line x1="{}" y1="{:.2f}" x2="{}" y2="{:.2f}" stroke="#ddd"/>)svg", kLeft, y, kLeft + pw, y) << '\n';
    out << fmt::format(R"svg(<text x="{}" y="{:.2f}" font-size="11" text-anchor="end">{}</text>)svg", kLeft - 6, y + 4,
                       tick_label(ay, t))
        << '\n';
  }

  out << fmt::format(R"svg(<text x="{}" y="24" font-size="14" text-anchor="middle">{}</text>)svg", kLeft + pw / 2,
                     escape(axes.title))
      << '\n';
  out << fmt::format(R"svg(<text x="{}" y="{}" font-size="12" text-anchor="middle">{}</text>)svg", kLeft + pw / 2,
                     kHeight - 16, escape(axes.x_label))
      << '\n';
  out << fmt::format(R"svg(<text x="16" y="{}" font-size="12" text-anchor="middle" transform="rotate(-90 16 {})">{}</text>)svg",
                     kTop + ph / 2, kTop + ph / 2, escape(axes.y_label))
      << '\n';

  double legend_y = kTop + 16;
  for (const auto& s : series) {
    std::string path;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!ax.usable(s.x[i]) || !ay.usable(s.y[i])) continue;
      path += fmt::format("{}{:.2f},{:.2f}", path.empty() ? "" : " ", px(s.x[i]), py(s.y[i]));
    }
    if (path.empty()) continue;
    out << fmt::format(R"svg(<polyline fill="none" stroke="{}" stroke-width="1.5"{} points="{}"/>)svg", s.color,
                       s.dotted ? R"svg( stroke-dasharray="2,3")svg" : "", path)
        << '\n';
    if (!s.label.empty()) {
      out << fmt::format(R"svg(<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="1.5"{}/>)svg", kLeft + pw - 170,
                         legend_y, kLeft + pw - 145, legend_y, s.color, s.dotted ? R"svg( stroke-dasharray="2,3")svg" : "")
          << '\n';
      out << fmt::format(R"svg(<text x="{}" y="{}" font-size="11">{}</text>)svg", kLeft + pw - 140, legend_y + 4,
                         escape(s.label))
          << '\n';
      legend_y += 16;
    }
  }
  out << "</svg>\n";
}

}  // namespace pgreedy
