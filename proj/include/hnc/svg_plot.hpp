#pragma once

// Minimal SVG line chart: one or more series over a shared x axis, optional
// log scaling per axis. Output is deterministic text (fixed 2-decimal
// coordinates).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace hnc::svg {

struct Series {
  std::string label;
  std::vector<double> y;
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<Series> series;
  bool log_x = false;
  bool log_y = false;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline std::string escape(const std::string& s) {
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

}  // namespace detail

/// True when every value is positive and they span more than two decades.
inline bool wants_log(const std::vector<double>& v) {
  if (v.empty()) return false;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo > 0.0 && *hi / *lo > 100.0;
}

inline std::string render(const Chart& c) {
  const double W = 720, H = 440, left = 80, right = 20, top = 40, bottom = 60;
  const double pw = W - left - right, ph = H - top - bottom;
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  auto tx = [&](double v) { return c.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return c.log_y ? std::log10(v) : v; };
  auto usable_x = [&](double v) { return std::isfinite(v) && (!c.log_x || v > 0.0); };
  auto usable_y = [&](double v) { return std::isfinite(v) && (!c.log_y || v > 0.0); };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (double v : c.x) {
    if (!usable_x(v)) continue;
    x0 = std::min(x0, tx(v));
    x1 = std::max(x1, tx(v));
  }
  for (const auto& s : c.series) {
    for (double v : s.y) {
      if (!usable_y(v)) continue;
      y0 = std::min(y0, ty(v));
      y1 = std::max(y1, ty(v));
    }
  }
  if (!(x1 > x0)) { x0 -= 0.5; x1 += 0.5; }
  if (!(y1 > y0)) { y0 -= 0.5; y1 += 0.5; }
  auto px = [&](double v) { return left + (tx(v) - x0) / (x1 - x0) * pw; };
  auto py = [&](double v) { return top + ph - (ty(v) - y0) / (y1 - y0) * ph; };

  using detail::num;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" + num(H) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(W / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         detail::escape(c.title) + "</text>\n";
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = x0 + (x1 - x0) * i / 5.0, fy = y0 + (y1 - y0) * i / 5.0;
    const double sx = left + pw * i / 5.0, sy = top + ph - ph * i / 5.0;
    const double vx = c.log_x ? std::pow(10.0, fx) : fx, vy = c.log_y ? std::pow(10.0, fy) : fy;
    out += "<line x1=\"" + num(sx) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(sx) + "\" y2=\"" +
           num(top + ph + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(sx) + "\" y=\"" + num(top + ph + 18) + "\" text-anchor=\"middle\" font-size=\"11\">" +
           detail::tick_label(vx) + "</text>\n";
    out += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(sy) + "\" x2=\"" + num(left) + "\" y2=\"" + num(sy) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(left - 8) + "\" y=\"" + num(sy + 4) + "\" text-anchor=\"end\" font-size=\"11\">" +
           detail::tick_label(vy) + "</text>\n";
  }
  out += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(H - 16) + "\" text-anchor=\"middle\" font-size=\"13\">" +
         detail::escape(c.x_label + (c.log_x ? " (log)" : "")) + "</text>\n";
  out += "<text transform=\"translate(18," + num(top + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" +
         detail::escape(c.y_label + (c.log_y ? " (log)" : "")) + "</text>\n";

  for (std::size_t k = 0; k < c.series.size(); ++k) {
    const auto& s = c.series[k];
    std::string pts;
    for (std::size_t i = 0; i < c.x.size() && i < s.y.size(); ++i) {
      if (!usable_x(c.x[i]) || !usable_y(s.y[i])) continue;
      if (!pts.empty()) pts += ' ';
      pts += num(px(c.x[i])) + "," + num(py(s.y[i]));
    }
    const char* colour = colours[k % 5];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" + pts +
           "\"/>\n";
    if (c.series.size() > 1) {
      const double ly = top + 16 + 16.0 * static_cast<double>(k);
      out += "<text x=\"" + num(left + pw - 8) + "\" y=\"" + num(ly) + "\" text-anchor=\"end\" font-size=\"11\" fill=\"" +
             colour + "\">" + detail::escape(s.label) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hnc::svg
