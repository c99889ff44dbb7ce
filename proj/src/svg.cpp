// Copyright 2026 The qgamble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgamble/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qgamble/errors.hpp"

namespace qgamble {

namespace {

constexpr double kLeft = 80, kRight = 30, kTop = 45, kBottom = 60;
constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(const char* pattern, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double range, int target) {
  const double raw = range / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  if (r < 1.5) return mag;
  if (r < 3.5) return 2 * mag;
  if (r < 7.5) return 5 * mag;
  return 10 * mag;
}

struct Axis {
  double lo, hi;
  double pixel_lo, pixel_hi;

  double map(double v) const { return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo); }
};

}  // namespace

std::string render_svg(const PlotSpec& plot) {
  if (plot.series.empty()) throw InvalidInput("render_svg: no series");
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = 0.0, ymax = -std::numeric_limits<double>::infinity();
  for (const auto& s : plot.series) {
    if (s.x.size() < 2 || s.x.size() != s.y.size()) {
      throw InvalidInput("render_svg: series '" + s.name + "' needs at least two (x, y) points");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  for (const auto& m : plot.markers) {
    xmin = std::min(xmin, m.x);
    xmax = std::max(xmax, m.x);
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  ymax += 0.05 * (ymax - ymin);

  const Axis ax{xmin, xmax, kLeft, kSvgWidth - kRight};
  const Axis ay{ymin, ymax, kSvgHeight - kBottom, kTop};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSvgWidth
     << "\" height=\"" << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight
     << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!plot.title.empty()) {
    os << "<text x=\"" << kSvgWidth / 2 << "\" y=\"25\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"16\">" << xml_escape(plot.title) << "</text>\n";
  }

  // Frame and ticks.
  os << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\""
     << px(kSvgWidth - kLeft - kRight) << "\" height=\"" << px(kSvgHeight - kTop - kBottom)
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  const double xstep = nice_step(xmax - xmin, 8);
  for (long i = std::lround(std::ceil(xmin / xstep - 1e-9)); i * xstep <= xmax + 1e-9 * xstep; ++i) {
    const double t = static_cast<double>(i) * xstep;
    const double x = ax.map(t);
    const double shown = std::abs(t) < 1e-9 * xstep ? 0.0 : t;
    os << "<line x1=\"" << px(x) << "\" y1=\"" << px(ay.pixel_lo) << "\" x2=\"" << px(x)
       << "\" y2=\"" << px(ay.pixel_lo + 5) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << px(x) << "\" y=\"" << px(ay.pixel_lo + 20)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt("%g", shown) << "</text>\n";
  }
  const double ystep = nice_step(ymax - ymin, 6);
  for (long i = std::lround(std::ceil(ymin / ystep - 1e-9)); i * ystep <= ymax + 1e-9 * ystep; ++i) {
    const double t = static_cast<double>(i) * ystep;
    const double y = ay.map(t);
    const double shown = std::abs(t) < 1e-9 * ystep ? 0.0 : t;
    os << "<line x1=\"" << px(ax.pixel_lo - 5) << "\" y1=\"" << px(y) << "\" x2=\""
       << px(ax.pixel_lo) << "\" y2=\"" << px(y) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << px(ax.pixel_lo - 8) << "\" y=\"" << px(y + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt("%g", shown) << "</text>\n";
  }
  os << "<text x=\"" << px((ax.pixel_lo + ax.pixel_hi) / 2) << "\" y=\"" << kSvgHeight - 15
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << xml_escape(plot.x_label) << "</text>\n"
     << "<text x=\"20\" y=\"" << px((ay.pixel_lo + ay.pixel_hi) / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 20 "
     << px((ay.pixel_lo + ay.pixel_hi) / 2) << ")\">" << xml_escape(plot.y_label) << "</text>\n";

  for (const auto& m : plot.markers) {
    const double x = ax.map(m.x);
    os << "<line x1=\"" << px(x) << "\" y1=\"" << px(ay.pixel_lo) << "\" x2=\"" << px(x)
       << "\" y2=\"" << px(ay.pixel_hi) << "\" stroke=\"gray\" stroke-dasharray=\"4,3\"/>\n";
    if (!m.label.empty()) {
      os << "<text x=\"" << px(x + 3) << "\" y=\"" << px(ay.pixel_hi + 12)
         << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"gray\">" << xml_escape(m.label)
         << "</text>\n";
    }
  }

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    os << "<polyline fill=\"none\" stroke=\"" << kPalette[k % kPalette.size()]
       << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!first) os << ' ';
      os << px(ax.map(s.x[i])) << ',' << px(ay.map(s.y[i]));
      first = false;
    }
    os << "\"/>\n";
  }

  // Legend, top right.
  const double lx = ax.pixel_hi - 190;
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const double ly = ay.pixel_hi + 18 + 18.0 * static_cast<double>(k);
    os << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly) << "\" x2=\"" << px(lx + 25)
       << "\" y2=\"" << px(ly) << "\" stroke=\"" << kPalette[k % kPalette.size()]
       << "\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << px(lx + 32) << "\" y=\"" << px(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(plot.series[k].name)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qgamble
