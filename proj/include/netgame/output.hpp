#ifndef NETGAME_OUTPUT_HPP
#define NETGAME_OUTPUT_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgame/experiments.hpp"

namespace netgame {

namespace detail {

/// Shortest-round-trip-safe decimal rendering of a double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt_tick(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace detail

/// Writes sweep rows as CSV with the fixed column set
///   param,j_star,j_agnostic,inverse_poi,gap,bound,iterations
/// in row order, 17 significant digits (values round-trip exactly).
/// Skipped or failed rows keep their place with nan fields. Throws on empty
/// input or an unwritable path.
inline void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows to write");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
  out << "param,j_star,j_agnostic,inverse_poi,gap,bound,iterations\n";
  for (const SweepRow& r : rows) {
    out << detail::fmt17(r.param) << ',' << detail::fmt17(r.j_star) << ','
        << detail::fmt17(r.j_agnostic) << ',' << detail::fmt17(r.inverse_poi)
        << ',' << detail::fmt17(r.gap) << ',' << detail::fmt17(r.bound) << ','
        << r.iterations << '\n';
  }
  if (!out.flush()) throw std::runtime_error("emit_csv: write failed for " + path);
}

enum class PlotKind {
  InversePoi,   ///< j_agnostic / j_star against the swept parameter
  GapVsBound,   ///< relative gap and its certified bound, two series
};

namespace detail {

struct Series {
  std::string label;
  std::string color;
  std::vector<double> x, y;  // same length; NaN y breaks the line
};

inline void svg_polyline(std::string& svg, const Series& s,
                         double x0, double x1, double y0, double y1,
                         double px, double py, double pw, double ph) {
  auto sx = [&](double v) { return px + (v - x0) / (x1 - x0) * pw; };
  auto sy = [&](double v) { return py + ph - (v - y0) / (y1 - y0) * ph; };
  std::string points;
  auto flush_run = [&]() {
    if (!points.empty()) {
      svg += "  <polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
      points.clear();
    }
  };
  char buf[64];
  for (size_t i = 0; i < s.x.size(); ++i) {
    if (std::isnan(s.y[i]) || std::isnan(s.x[i])) {
      flush_run();
      continue;
    }
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(s.x[i]), sy(s.y[i]));
    points += buf;
  }
  flush_run();
}

}  // namespace detail

/// Renders a sweep as a standalone SVG line chart (axes, ticks, legend).
/// Self-contained on purpose: reproducing the experiment figures must not
/// depend on an external plotting stack. Throws on empty input, a kind with
/// no finite data, or an unwritable path.
inline void emit_plot(const std::vector<SweepRow>& rows, const std::string& path,
                      PlotKind kind) {
  if (rows.empty()) throw std::invalid_argument("emit_plot: no rows to plot");

  std::vector<detail::Series> series;
  if (kind == PlotKind::InversePoi) {
    detail::Series s{"inverse price of information", "#1f77b4", {}, {}};
    for (const SweepRow& r : rows) {
      s.x.push_back(r.param);
      s.y.push_back(r.inverse_poi);
    }
    series.push_back(std::move(s));
  } else {
    detail::Series gap{"relative revenue gap", "#1f77b4", {}, {}};
    detail::Series bound{"certified lower bound", "#d62728", {}, {}};
    for (const SweepRow& r : rows) {
      gap.x.push_back(r.param);
      gap.y.push_back(r.gap);
      bound.x.push_back(r.param);
      bound.y.push_back(r.bound);
    }
    series.push_back(std::move(gap));
    series.push_back(std::move(bound));
  }

  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool any = false;
  for (const auto& s : series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) continue;
      if (!any) {
        x0 = x1 = s.x[i];
        y0 = y1 = s.y[i];
        any = true;
      }
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  if (!any) throw std::invalid_argument("emit_plot: no finite data points");
  if (x1 == x0) { x0 -= 0.5; x1 += 0.5; }
  if (y1 == y0) { y0 -= 0.5; y1 += 0.5; }
  const double ypad = 0.05 * (y1 - y0);
  y0 -= ypad;
  y1 += ypad;

  const double W = 720, H = 480, px = 80, py = 40, pw = W - px - 30,
               ph = H - py - 60;
  std::string svg;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                W, H, W, H);
  svg += buf;
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof(buf),
                "  <rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                "fill=\"none\" stroke=\"#333\"/>\n",
                px, py, pw, ph);
  svg += buf;

  const int ticks = 5;
  for (int t = 0; t <= ticks; ++t) {
    const double fx = x0 + (x1 - x0) * t / ticks;
    const double gx = px + pw * t / ticks;
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n",
                  gx, py, gx, py + ph);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                  "text-anchor=\"middle\">%s</text>\n",
                  gx, py + ph + 18, detail::fmt_tick(fx).c_str());
    svg += buf;
    const double fy = y0 + (y1 - y0) * t / ticks;
    const double gy = py + ph - ph * t / ticks;
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n",
                  px, gy, px + pw, gy);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                  "text-anchor=\"end\">%s</text>\n",
                  px - 6, gy + 4, detail::fmt_tick(fy).c_str());
    svg += buf;
  }

  for (const auto& s : series)
    detail::svg_polyline(svg, s, x0, x1, y0, y1, px, py, pw, ph);

  double ly = py + 16;
  for (const auto& s : series) {
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"%s\" stroke-width=\"2\"/>\n",
                  px + 10, ly - 4, px + 38, ly - 4, s.color.c_str());
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%s</text>\n",
                  px + 44, ly, s.label.c_str());
    svg += buf;
    ly += 18;
  }
  svg += "</svg>\n";

  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_plot: cannot open " + path);
  out << svg;
  if (!out.flush()) throw std::runtime_error("emit_plot: write failed for " + path);
}

}  // namespace netgame

#endif  // NETGAME_OUTPUT_HPP
